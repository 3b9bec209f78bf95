use clap::Args;
use xlag::report::parse_rational;
use xlag::{ExtensionSpec, IsotonicParams, Rational, Result};

/// Flags shared by every subcommand that acts on one extension.
#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Laguerre parameter alpha of the extended potential, e.g. 5/2
    #[arg(
        long,
        conflicts_with = "l",
        required_unless_present = "l",
        allow_hyphen_values = true
    )]
    pub alpha: Option<String>,
    /// Angular parameter l = alpha - 1/2
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    #[arg(long, default_value = "1")]
    pub omega: String,
    /// Seed list such as "I:1,I:3,II:2"; order does not matter
    #[arg(long, default_value = "")]
    pub seeds: String,
}

impl SpecArgs {
    pub fn to_spec(&self) -> Result<ExtensionSpec> {
        let omega = parse_rational(&self.omega)?;
        let alpha: Rational = match (&self.alpha, &self.l) {
            (Some(a), _) => parse_rational(a)?,
            (None, Some(l)) => IsotonicParams::from_l(parse_rational(l)?, omega.clone())?.alpha(),
            (None, None) => unreachable!("clap requires one of --alpha, --l"),
        };
        let (m_i, m_ii) = parse_seeds(&self.seeds)?;
        ExtensionSpec::new(alpha, omega, m_i, m_ii)
    }
}

/// Splits `"I:1,II:2,..."` into type-I and type-II index lists.
pub fn parse_seeds(s: &str) -> Result<(Vec<u32>, Vec<u32>)> {
    let mut m_i = Vec::new();
    let mut m_ii = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad =
            || xlag::Error::SpecInvalid(format!("seed {item:?} is not of the form I:m or II:m"));
        let (kind, m) = item.split_once(':').ok_or_else(bad)?;
        let m: u32 = m.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "I" | "i" => m_i.push(m),
            "II" | "ii" => m_ii.push(m),
            _ => return Err(bad()),
        }
    }
    Ok((m_i, m_ii))
}

/// Comma-separated list of non-negative integers.
pub fn parse_levels(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| xlag::Error::SpecInvalid(format!("{t:?} is not a level index")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(parse_seeds("I:1,I:3,II:2").unwrap(), (vec![1, 3], vec![2]));
        assert_eq!(parse_seeds(" II:2 , I:1 ").unwrap(), (vec![1], vec![2]));
        assert_eq!(parse_seeds("").unwrap(), (vec![], vec![]));
        assert!(parse_seeds("III:1").is_err());
        assert!(parse_seeds("I1").is_err());
        assert!(parse_seeds("I:-1").is_err());
    }

    #[test]
    fn levels() {
        assert_eq!(parse_levels("0,1, 3").unwrap(), vec![0, 1, 3]);
        assert!(parse_levels("a").is_err());
    }
}
