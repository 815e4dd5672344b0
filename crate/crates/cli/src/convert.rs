use hilbjack::json::{symfunc_from_str, symfunc_to_string};
use hilbjack::Basis;

use crate::error::CliError;

/// Parses a symmetric function from JSON and re-expresses it in `target`.
pub fn cmd_convert(input: &str, target: &str) -> Result<String, CliError> {
    let basis = Basis::from_symbol(target.trim()).ok_or_else(|| {
        CliError::Input(format!("unknown basis {target:?}; expected m, p or mtilde"))
    })?;
    let f = symfunc_from_str(input).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(symfunc_to_string(&f.convert(basis)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_two_in_power_sums() {
        let m11 = r#"{"basis":"m","terms":[{"partition":[1,1],"coeff":{"num":[["1","1"]],"den":[["1","1"]]}}]}"#;
        let out = cmd_convert(m11, "p").unwrap();
        assert_eq!(
            out,
            r#"{"basis":"p","terms":[{"partition":[2],"coeff":{"num":[["-1","2"]],"den":[["1","1"]]}},{"partition":[1,1],"coeff":{"num":[["1","2"]],"den":[["1","1"]]}}]}"#
        );
    }

    #[test]
    fn empty_element_and_errors() {
        assert_eq!(
            cmd_convert(r#"{"basis":"p","terms":[]}"#, "mtilde").unwrap(),
            r#"{"basis":"mtilde","terms":[]}"#
        );
        assert_eq!(cmd_convert("{", "m").unwrap_err().exit_code(), 3);
        assert_eq!(
            cmd_convert(r#"{"basis":"p","terms":[]}"#, "q")
                .unwrap_err()
                .exit_code(),
            3
        );
    }
}
