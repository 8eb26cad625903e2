//! Text form, one line per (monomial, blade) pair; grammar in docs/FORMATS.md.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{PolyError, PolyMV};
use crate::algebra::{Blade, ExactScalar, Multivector};

pub fn format_poly(p: &PolyMV) -> String {
    let m = p.dim();
    let vars = p.vars().join(",");
    let mut out = format!("poly dim={m} vars={vars}\n");
    for (k, c) in p.terms() {
        let exps: Vec<String> = k
            .chunks(m)
            .map(|ch| ch.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        let exps = exps.join("|");
        for (b, x) in c.terms() {
            let idx: Vec<String> = b.indices().iter().map(|j| j.to_string()).collect();
            out.push_str(&format!(
                "{vars}; {exps}; [{}]; {}/{}; {}/{}\n",
                idx.join(","),
                x.re().numer(),
                x.re().denom(),
                x.im().numer(),
                x.im().denom()
            ));
        }
    }
    out
}

fn perr(msg: impl Into<String>) -> PolyError {
    PolyError::Parse(msg.into())
}

fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| perr(format!("bad rational `{s}`")))?;
    let d: BigInt = d.trim().parse().map_err(|_| perr(format!("bad rational `{s}`")))?;
    if d == BigInt::from(0) {
        return Err(perr(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_poly(s: &str) -> Result<PolyMV, PolyError> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| perr("empty input"))?;
    let mut dim = None;
    let mut vars: Option<Vec<String>> = None;
    let mut words = head.split_whitespace();
    if words.next() != Some("poly") {
        return Err(perr("header must start with `poly`"));
    }
    for w in words {
        if let Some(d) = w.strip_prefix("dim=") {
            dim = Some(d.parse::<usize>().map_err(|_| perr(format!("bad dim `{d}`")))?);
        } else if let Some(v) = w.strip_prefix("vars=") {
            vars = Some(v.split(',').filter(|x| !x.is_empty()).map(str::to_string).collect());
        } else {
            return Err(perr(format!("unexpected header field `{w}`")));
        }
    }
    let dim = dim.ok_or_else(|| perr("missing dim"))?;
    if dim == 0 || dim > crate::algebra::MAX_DIM {
        return Err(perr(format!("unsupported dimension {dim}")));
    }
    let vars = vars.ok_or_else(|| perr("missing vars"))?;
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut p = PolyMV::zero(dim, &names);
    for line in lines {
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(perr(format!("expected 5 fields in `{line}`")));
        }
        if fields[0] != vars.join(",") {
            return Err(perr(format!("variable list `{}` does not match header", fields[0])));
        }
        let mut key = Vec::with_capacity(dim * vars.len());
        let groups: Vec<&str> = fields[1].split('|').collect();
        if groups.len() != vars.len() {
            return Err(perr(format!("expected {} exponent groups", vars.len())));
        }
        for g in groups {
            let exps: Vec<u16> = g
                .split_whitespace()
                .map(|e| e.parse::<u16>().map_err(|_| perr(format!("bad exponent `{e}`"))))
                .collect::<Result<_, _>>()?;
            if exps.len() != dim {
                return Err(perr(format!("exponent group `{g}` must have {dim} entries")));
            }
            key.extend(exps);
        }
        let list = fields[2]
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| perr(format!("bad blade `{}`", fields[2])))?;
        let indices: Vec<usize> = list
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| perr(format!("bad index `{x}`"))))
            .collect::<Result<_, _>>()?;
        let blade = Blade::from_indices(dim, &indices)?;
        let c = ExactScalar::new(parse_rational(fields[3])?, parse_rational(fields[4])?);
        p.add_term(key, Multivector::from_terms(dim, [(blade, c)]));
    }
    Ok(p)
}
