//! Closed-form coefficients of the dual transforms.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TransformError;
use crate::special::{factorial_q, gamma_ratio, hypergeometric_terminating, pochhammer, q, qi};

fn half(m: usize) -> BigRational {
    q(m as i64, 2)
}

fn g(a: BigRational, b: BigRational) -> BigRational {
    gamma_ratio(&a, &b).expect("gamma arguments stay positive in range")
}

fn f(n: usize) -> BigRational {
    factorial_q(n as u64)
}

fn sign(e: usize) -> BigRational {
    if e % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn check_m(m: usize) -> Result<(), TransformError> {
    if m < 3 {
        return Err(TransformError::Dimension(m));
    }
    Ok(())
}

/// `θ_{n,k,ℓ}`, the weight of `|x|^{2n} K_{m,k+ℓ−2n} |y|^{2n}` in the
/// Stiefel average of `⟨x,τ⟩^k⟨x,τ†⟩^ℓ⟨y,τ⟩^ℓ⟨y,τ†⟩^k`.
pub fn theta_coefficient(n: usize, k: usize, l: usize, m: usize) -> Result<BigRational, TransformError> {
    check_m(m)?;
    if n > k.min(l) {
        return Err(TransformError::OutOfRange(format!("θ needs n ≤ min(k, ℓ), got n={n} k={k} ℓ={l}")));
    }
    Ok(theta_unchecked(n, k, l, m))
}

pub(crate) fn theta_or_zero(n: usize, k: usize, l: usize, m: usize) -> BigRational {
    if n > k.min(l) {
        BigRational::zero()
    } else {
        theta_unchecked(n, k, l, m)
    }
}

fn theta_unchecked(n: usize, k: usize, l: usize, m: usize) -> BigRational {
    let h = half(m);
    let (ni, ki, li, mi) = (n as i64, k as i64, l as i64, m as i64);
    let top = &h + qi(ki + li - ni);
    let r1 = g(&h + qi(ki - ni - 1), top.clone());
    let r2 = g(&h + qi(li - ni - 1), top);
    let r3 = g(qi(mi - 1), qi(mi + ki + li - 2 * ni - 2));
    let kl = f(k) * f(l) / f(n);
    sign(k + l) * r1 * r2 * r3 * qi(mi - 2) / (qi(4) * f(l - n)) * &kl * &kl * f(k + l - 2 * n) / f(k - n)
}

/// `ϑ_{2j,k} = 2θ_{j,k,k}`, `ϑ_{2j+1,k} = −ϑ_{2j,k}`.
pub fn vartheta_coefficient(j: usize, k: usize, m: usize) -> Result<BigRational, TransformError> {
    check_m(m)?;
    if j > 2 * k {
        return Err(TransformError::OutOfRange(format!("ϑ needs j ≤ 2k, got j={j} k={k}")));
    }
    let base = qi(2) * theta_unchecked(j / 2, k, k, m);
    Ok(if j % 2 == 0 { base } else { -base })
}

/// `ν_{k,s} = (−1)^k Γ(k+2s+m/2)/(Γ(k+2s+1)Γ(m/2))`.
pub fn nu_coefficient(k: usize, s: usize, m: usize) -> BigRational {
    sign(k) * pochhammer(&half(m), k + 2 * s) / f(k + 2 * s)
}

/// `Γ(s+m/2)/(Γ(s+1)Γ(m/2))`, the reciprocal of the normalized norm of a
/// degree-`s` basis function.
pub fn inverse_basis_norm(s: usize, m: usize) -> BigRational {
    pochhammer(&half(m), s) / f(s)
}

fn check_phi(t: usize, n: usize, m: usize) -> Result<(), TransformError> {
    check_m(m)?;
    if 2 * n > t {
        return Err(TransformError::OutOfRange(format!("φ needs 2n ≤ t, got t={t} n={n}")));
    }
    Ok(())
}

/// `φ_{t,n}` from the terminating ₄F₃ closed form.
pub fn phi_hypergeometric(t: usize, n: usize, m: usize) -> Result<BigRational, TransformError> {
    check_phi(t, n, m)?;
    let h = half(m);
    let (ti, ni, mi) = (t as i64, n as i64, m as i64);
    let base = &h + qi(ti - ni);
    let pre = g(&h + qi(ti), base.clone()) * g(&h + qi(ti - 2 * ni - 1), base) * g(qi(mi - 1), qi(mi + ti - 2 * ni - 2))
        * f(t - n)
        * f(t - n)
        / (qi(2) * f(t));
    let num = [qi(ni + 1), qi(ni + 1), qi(2 * ni - ti), &h - qi(1)];
    let den = [qi(ni - ti), qi(ni - ti), qi(2 * ni - ti + 2) - &h];
    let series = hypergeometric_terminating(&num, &den, t - 2 * n)?;
    Ok(pre * series)
}

/// `φ_{t,n} = ψ_{t,n} Σ_{k=n}^{t−n} ξ_{n,t−k,k}`.
pub fn phi_xi_sum(t: usize, n: usize, m: usize) -> Result<BigRational, TransformError> {
    check_phi(t, n, m)?;
    let h = half(m);
    let (ti, ni, mi) = (t as i64, n as i64, m as i64);
    let top = &h + qi(ti - ni);
    let psi = pochhammer(&h, t) / f(t) * qi(mi - 2) * g(qi(mi - 1), qi(mi + ti - 2 * ni - 2)) * f(t - 2 * n)
        / (qi(4) * f(n) * f(n));
    let mut sum = BigRational::zero();
    for k in n..=t - n {
        let a = t - k;
        let xi = f(a) * f(a) * f(k) * f(k) * g(&h + qi(a as i64 - ni - 1), top.clone())
            * g(&h + qi(k as i64 - ni - 1), top.clone())
            / (f(k - n) * f(a - n));
        sum += xi;
    }
    Ok(psi * sum)
}

/// `φ_{t,n} = (−1)^t Γ(t+m/2)/(Γ(m/2) t!) Σ_{k=n}^{t−n} θ_{n,t−k,k}`.
pub fn phi_theta_sum(t: usize, n: usize, m: usize) -> Result<BigRational, TransformError> {
    check_phi(t, n, m)?;
    let sum: BigRational = (n..=t - n).map(|k| theta_unchecked(n, t - k, k, m)).sum();
    Ok(sign(t) * inverse_basis_norm(t, m) * sum)
}

/// `φ_{t,n}`, the eigenvalue of the dual Hua-Radon composition on `z^{2n} H_{t−2n}`.
pub fn phi_coefficient(t: usize, n: usize, m: usize) -> Result<BigRational, TransformError> {
    phi_hypergeometric(t, n, m)
}

/// Which lower summation limit the printed `ρ` formula uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoLowerLimit {
    /// `s = n`, as printed for even `z`-powers.
    N,
    /// `s = 0`, as printed for odd `z`-powers.
    Zero,
}

/// `Σ_{s} ν_{t−2s,s} θ_{n,t−s,s} − [t even] ¼ ν_{0,t/2} ϑ_{2n,t/2}` with `n = ⌊a/2⌋`.
pub fn rho_with_lower_limit(t: usize, a: usize, m: usize, lower: RhoLowerLimit) -> Result<BigRational, TransformError> {
    check_m(m)?;
    if a > t {
        return Err(TransformError::OutOfRange(format!("ρ needs a ≤ t, got t={t} a={a}")));
    }
    let n = a / 2;
    let from = match lower {
        RhoLowerLimit::N => n,
        RhoLowerLimit::Zero => 0,
    };
    let mut r = BigRational::zero();
    for s in from..=t / 2 {
        r += nu_coefficient(t - 2 * s, s, m) * theta_or_zero(n, t - s, s, m);
    }
    if t % 2 == 0 {
        let l = t / 2;
        r -= q(1, 4) * nu_coefficient(0, l, m) * vartheta_coefficient(2 * n, l, m)?;
    }
    Ok(r)
}

/// `ρ_{t,a}`, the eigenvalue of the dual polarized composition on `z^a M_{t−a}`.
pub fn rho_coefficient(t: usize, a: usize, m: usize) -> Result<BigRational, TransformError> {
    let lower = if a % 2 == 0 { RhoLowerLimit::N } else { RhoLowerLimit::Zero };
    rho_with_lower_limit(t, a, m, lower)
}

/// `(−1)^j Γ(m/2)Γ(j+1)/Γ(m/2+j)`, the Stiefel average of `⟨ω,τ⟩^j⟨ω,τ†⟩^j` for unit `ω`.
pub fn frame_moment(j: usize, m: usize) -> BigRational {
    sign(j) / inverse_basis_norm(j, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        for m in 3..=7 {
            assert_eq!(theta_coefficient(0, 0, 0, m).unwrap(), qi(1));
            assert_eq!(theta_coefficient(0, 1, 0, m).unwrap(), q(-2, (m * m) as i64));
            assert_eq!(phi_coefficient(0, 0, m).unwrap(), qi(1));
            assert_eq!(rho_coefficient(0, 0, m).unwrap(), q(1, 2));
            assert_eq!(vartheta_coefficient(0, 0, m).unwrap(), qi(2));
            assert_eq!(vartheta_coefficient(1, 0, m).unwrap_err(), TransformError::OutOfRange("ϑ needs j ≤ 2k, got j=1 k=0".into()));
            assert_eq!(frame_moment(1, m), q(-2, m as i64));
        }
        assert_eq!(phi_coefficient(1, 0, 3).unwrap(), q(2, 3));
        assert_eq!(phi_coefficient(2, 0, 3).unwrap(), q(13, 30));
        assert_eq!(phi_coefficient(1, 0, 4).unwrap(), q(1, 2));
        assert_eq!(phi_coefficient(2, 0, 4).unwrap(), q(1, 4));
        assert_eq!(phi_coefficient(2, 1, 4).unwrap(), q(3, 4));
    }

    #[test]
    fn phi_routes_agree() {
        for m in 3..=5 {
            for t in 0..=6 {
                for n in 0..=t / 2 {
                    let a = phi_hypergeometric(t, n, m).unwrap();
                    assert_eq!(a, phi_xi_sum(t, n, m).unwrap(), "t={t} n={n} m={m}");
                    assert_eq!(a, phi_theta_sum(t, n, m).unwrap(), "t={t} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn rho_limits_agree_and_halve_phi() {
        for m in 3..=5 {
            for t in 0..=5 {
                for a in 0..=t {
                    let r = rho_with_lower_limit(t, a, m, RhoLowerLimit::N).unwrap();
                    assert_eq!(r, rho_with_lower_limit(t, a, m, RhoLowerLimit::Zero).unwrap());
                    assert_eq!(r, phi_coefficient(t, a / 2, m).unwrap() / qi(2));
                }
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(theta_coefficient(2, 1, 3, 4).is_err());
        assert!(phi_coefficient(3, 2, 4).is_err());
        assert!(rho_coefficient(2, 3, 4).is_err());
        assert!(matches!(theta_coefficient(0, 0, 0, 2), Err(TransformError::Dimension(2))));
    }
}
