//! Size limits from the `SEMWIDTH_LIMITS` environment variable.

use semwidth_core::Limits;

pub const ENV_VAR: &str = "SEMWIDTH_LIMITS";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad limits `{text}`: {reason}")]
pub struct LimitsError {
    pub text: String,
    pub reason: String,
}

/// Parses `tw=16,ghw=10,fhw=10,hw=9`. Keys may be omitted or repeated; each
/// overrides the default.
pub fn parse_limits(text: &str) -> Result<Limits, LimitsError> {
    let err = |reason: String| LimitsError {
        text: text.to_string(),
        reason,
    };
    let mut limits = Limits::default();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| err(format!("`{item}` is not key=value")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| err(format!("`{value}` is not a count")))?;
        match key.trim() {
            "tw" => limits.tw = value,
            "ghw" => limits.ghw = value,
            "fhw" => limits.fhw = value,
            "hw" => limits.hw = value,
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    Ok(limits)
}

/// Limits from the environment, or the defaults when unset.
pub fn limits_from_env() -> Result<Limits, LimitsError> {
    match std::env::var(ENV_VAR) {
        Ok(text) => parse_limits(&text),
        Err(_) => Ok(Limits::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        assert_eq!(parse_limits("").unwrap(), Limits::default());
        let l = parse_limits("tw=16,ghw=10,fhw=10,hw=9").unwrap();
        assert_eq!(l, Limits::default());
        let l = parse_limits("hw=3").unwrap();
        assert_eq!((l.hw, l.tw), (3, 16));
        assert!(parse_limits("pw=3").is_err());
        assert!(parse_limits("tw").is_err());
        assert!(parse_limits("tw=-1").is_err());
    }
}
