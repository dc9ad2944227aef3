//! Case descriptors given piecewise on the command line.

use hilbfix_commalg::{CaseSpec, Chart, LocalPoint};

#[derive(Debug, PartialEq, Eq)]
pub struct DescriptorError(pub String);

impl std::fmt::Display for DescriptorError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DescriptorError {}

fn err<T>(msg: impl Into<String>) -> Result<T, DescriptorError> {
    Err(DescriptorError(msg.into()))
}

/// Exponents `(a, b)` of a monomial `x^a y^b`, written like `y`, `xy^2` or `x^2 y^3`.
pub fn parse_equation(s: &str) -> Result<(u32, u32), DescriptorError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut exps = [None, None];
    let mut rest = compact.as_str();
    while let Some(v) = rest.chars().next() {
        let slot = match v {
            'x' => 0,
            'y' => 1,
            _ => return err(format!("unexpected '{v}' in equation {s:?}")),
        };
        rest = &rest[1..];
        let mut k = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let digits: String = r.chars().take_while(char::is_ascii_digit).collect();
            k = digits.parse().map_err(|_| DescriptorError(format!("missing exponent in {s:?}")))?;
            rest = &r[digits.len()..];
        }
        if exps[slot].replace(k).is_some() {
            return err(format!("variable repeated in {s:?}"));
        }
    }
    Ok((exps[0].unwrap_or(0), exps[1].unwrap_or(0)))
}

/// Torus weights `(x, y)` written as `-l,w`.
pub fn parse_weights(s: &str) -> Result<(u32, u32), DescriptorError> {
    let v = ints(s)?;
    match v.as_slice() {
        [x, y] if *x < 0 && *y > 0 => Ok(((-x) as u32, *y as u32)),
        [_, _] => err(format!("weights {s:?}: expected a negative x weight and a positive y weight")),
        _ => err(format!("weights {s:?}: expected two integers")),
    }
}

fn ints(s: &str) -> Result<Vec<i64>, DescriptorError> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| DescriptorError(format!("not an integer list: {s:?}"))))
        .collect()
}

pub fn parse_chart(s: &str) -> Result<Chart, DescriptorError> {
    match s.to_ascii_uppercase().as_str() {
        "U1" => Ok(Chart::U1),
        "U2" => Ok(Chart::U2),
        _ => err(format!("unknown chart {s:?}; expected U1 or U2")),
    }
}

/// A single point `x^a y^b` with weights `(-l, w)`. The base weight defaults to `-a l + b w`
/// and is otherwise checked against it.
pub fn point_case(eq: &str, weights: &str, chart: Option<&str>, e: Option<u32>) -> Result<CaseSpec, DescriptorError> {
    let (a, b) = parse_equation(eq)?;
    let (l, w) = parse_weights(weights)?;
    let point = LocalPoint::new(a, b, l, w);
    let base = point.base_weight();
    if base <= 0 {
        return err(format!("{}: base weight {base} is not positive", point.equation()));
    }
    let e = e.unwrap_or(base as u32);
    let spec = match chart {
        None => CaseSpec::Single { point, e },
        Some(c) => CaseSpec::Punctual { chart: parse_chart(c)?, point, e },
    };
    spec.validate().map_err(|x| DescriptorError(x.to_string()))?;
    Ok(spec)
}

/// Two points on a parabolic surface, `a1,b1,w1,a2,b2,w2,e`; the x weights are `-(w_i - 1)`.
pub fn separated_case(s: &str) -> Result<CaseSpec, DescriptorError> {
    let v = ints(s)?;
    if v.len() != 7 || v.iter().any(|&x| x < 0) {
        return err(format!("separated descriptor {s:?}: expected seven nonnegative integers"));
    }
    let u = |i: usize| v[i] as u32;
    if u(2) == 0 || u(5) == 0 {
        return err("y weights must be positive");
    }
    let p = LocalPoint::new(u(0), u(1), u(2) - 1, u(2));
    let q = LocalPoint::new(u(3), u(4), u(5) - 1, u(5));
    let spec = CaseSpec::Separated { p, q, e: u(6) };
    spec.validate().map_err(|x| DescriptorError(x.to_string()))?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equations() {
        assert_eq!(parse_equation("y"), Ok((0, 1)));
        assert_eq!(parse_equation("xy^2"), Ok((1, 2)));
        assert_eq!(parse_equation("x^2 y^3"), Ok((2, 3)));
        assert_eq!(parse_equation("x^4*y^5"), Ok((4, 5)));
        assert!(parse_equation("xz").is_err());
        assert!(parse_equation("xx").is_err());
        assert!(parse_equation("x^").is_err());
    }

    #[test]
    fn point_descriptors() {
        let spec = point_case("y", "-1,2", Some("U2"), None).unwrap();
        assert_eq!(spec, CaseSpec::Punctual { chart: Chart::U2, point: LocalPoint::new(0, 1, 1, 2), e: 2 });
        assert!(point_case("y", "-1,2", Some("U2"), Some(3)).is_err());
        assert!(point_case("y", "1,2", None, None).is_err());
        assert!(point_case("x^3y", "-1,2", None, None).is_err());
    }

    #[test]
    fn separated_descriptors() {
        let spec = separated_case("0,1,2,0,2,2,4").unwrap_err();
        assert!(spec.0.contains("weight"), "{spec}");
        let spec = separated_case("0,1,3,1,2,2,3").unwrap();
        assert_eq!(spec, CaseSpec::Separated { p: LocalPoint::new(0, 1, 2, 3), q: LocalPoint::new(1, 2, 1, 2), e: 3 });
        assert!(separated_case("1,2,3").is_err());
    }
}
