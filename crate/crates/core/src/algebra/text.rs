//! Line-oriented text form:
//! `dim 3; term [1,2] 1/1 0/1; term [] -5/2 1/3`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{AlgebraError, Blade, ExactScalar, Multivector};

pub fn format_multivector(a: &Multivector) -> String {
    let mut out = format!("dim {}", a.dim());
    for (b, c) in a.terms() {
        let idx: Vec<String> = b.indices().iter().map(|j| j.to_string()).collect();
        out.push_str(&format!(
            "; term [{}] {}/{} {}/{}",
            idx.join(","),
            c.re().numer(),
            c.re().denom(),
            c.im().numer(),
            c.im().denom()
        ));
    }
    out
}

fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("bad rational `{s}`"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_multivector(s: &str) -> Result<Multivector, AlgebraError> {
    let mut parts = s.split(';').map(str::trim).filter(|p| !p.is_empty());
    let head = parts.next().ok_or_else(|| AlgebraError::Parse("empty input".into()))?;
    let dim: usize = head
        .strip_prefix("dim")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| AlgebraError::Parse(format!("expected `dim <m>`, got `{head}`")))?;
    if dim == 0 || dim > super::MAX_DIM {
        return Err(AlgebraError::Parse(format!("unsupported dimension {dim}")));
    }
    let mut terms = Vec::new();
    for part in parts {
        let rest = part
            .strip_prefix("term")
            .ok_or_else(|| AlgebraError::Parse(format!("expected `term`, got `{part}`")))?
            .trim();
        let close = rest
            .find(']')
            .filter(|_| rest.starts_with('['))
            .ok_or_else(|| AlgebraError::Parse(format!("missing blade list in `{part}`")))?;
        let list = &rest[1..close];
        let indices = list
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| AlgebraError::Parse(format!("bad index `{x}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let blade = Blade::from_indices(dim, &indices)?;
        let nums: Vec<&str> = rest[close + 1..].split_whitespace().collect();
        if nums.len() != 2 {
            return Err(AlgebraError::Parse(format!("expected re and im in `{part}`")));
        }
        let c = ExactScalar::new(parse_rational(nums[0])?, parse_rational(nums[1])?);
        terms.push((blade, c));
    }
    Ok(Multivector::from_terms(dim, terms))
}
