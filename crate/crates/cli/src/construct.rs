//! Parameter syntax for `construct`.
//!
//! ```text
//! left-zero N | right-zero N | cyclic N | null-monogenic N
//! group NAME                       e.g. Z4, Z2xZ2, S3, D4, Q8
//! right-group NAME K
//! rees NAME I L P                  P rows split by ';', entries by ','
//! rees0 NAME I L P                 'z' marks a zero entry
//! group-two-left-zeros NAME [SWAPS] [--strict]   SWAPS like 0,1,1,0
//! direct-product FILE FILE | adjoin-zero FILE | adjoin-identity FILE
//! ```

use std::path::Path;

use unisem::families::{group_by_name, FamilySpec};
use unisem::format::parse_table;
use unisem::{Error, Result, Semigroup};

pub const FAMILIES: [&str; 12] = [
    "left-zero",
    "right-zero",
    "cyclic",
    "null-monogenic",
    "group",
    "right-group",
    "rees",
    "rees0",
    "group-two-left-zeros",
    "direct-product",
    "adjoin-zero",
    "adjoin-identity",
];

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn expect_args(family: &str, params: &[String], counts: &[usize]) -> Result<()> {
    if counts.contains(&params.len()) {
        Ok(())
    } else {
        Err(invalid(format!(
            "`{family}` takes {} parameter(s), got {}",
            counts.iter().map(usize::to_string).collect::<Vec<_>>().join(" or "),
            params.len()
        )))
    }
}

fn number(token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| invalid(format!("`{token}` is not a non-negative integer")))
}

fn read_semigroup(path: &str) -> Result<Semigroup> {
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    Ok(parse_table(&text)?.semigroup)
}

fn matrix<T>(text: &str, entry: impl Fn(&str) -> Result<T>) -> Result<Vec<Vec<T>>> {
    text.split(';')
        .map(|row| row.split(',').map(|e| entry(e.trim())).collect())
        .collect()
}

fn flags(text: &str) -> Result<Vec<bool>> {
    text.split(',')
        .map(|t| match t.trim() {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(invalid(format!("swap flag `{other}` must be 0 or 1"))),
        })
        .collect()
}

pub fn parse_family(family: &str, params: &[String], strict: bool) -> Result<FamilySpec> {
    let one = |counts: &[usize]| expect_args(family, params, counts);
    Ok(match family {
        "left-zero" => {
            one(&[1])?;
            FamilySpec::LeftZero(number(&params[0])?)
        }
        "right-zero" => {
            one(&[1])?;
            FamilySpec::RightZero(number(&params[0])?)
        }
        "cyclic" => {
            one(&[1])?;
            FamilySpec::CyclicGroup(number(&params[0])?)
        }
        "null-monogenic" => {
            one(&[1])?;
            FamilySpec::NullMonogenicNil(number(&params[0])?)
        }
        "group" => {
            one(&[1])?;
            // G × 1 is G with the same labelling
            FamilySpec::DirectProduct(group_by_name(&params[0])?, Semigroup::new(1, vec![vec![0]])?)
        }
        "right-group" => {
            one(&[2])?;
            FamilySpec::RightGroupProduct {
                group: group_by_name(&params[0])?,
                right_zero: number(&params[1])?,
            }
        }
        "rees" => {
            one(&[4])?;
            FamilySpec::ReesMatrix {
                group: group_by_name(&params[0])?,
                i_count: number(&params[1])?,
                lambda_count: number(&params[2])?,
                sandwich: matrix(&params[3], number)?,
            }
        }
        "rees0" => {
            one(&[4])?;
            FamilySpec::ReesMatrix0 {
                group: group_by_name(&params[0])?,
                i_count: number(&params[1])?,
                lambda_count: number(&params[2])?,
                sandwich: matrix(&params[3], |e| if e == "z" { Ok(None) } else { number(e).map(Some) })?,
            }
        }
        "group-two-left-zeros" => {
            one(&[1, 2])?;
            FamilySpec::GroupTwoLeftZeros {
                group: group_by_name(&params[0])?,
                swaps: params.get(1).map(|t| flags(t)).transpose()?,
                strict_paper: strict,
            }
        }
        "direct-product" => {
            one(&[2])?;
            FamilySpec::DirectProduct(read_semigroup(&params[0])?, read_semigroup(&params[1])?)
        }
        "adjoin-zero" => {
            one(&[1])?;
            FamilySpec::ZeroAdjoined(read_semigroup(&params[0])?)
        }
        "adjoin-identity" => {
            one(&[1])?;
            FamilySpec::IdentityAdjoined(read_semigroup(&params[0])?)
        }
        other => {
            return Err(invalid(format!(
                "unknown family `{other}`; expected one of {}",
                FAMILIES.join(", ")
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use unisem::construct;

    fn args(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_matrices() {
        let spec = parse_family("rees0", &args(&["Z2", "2", "2", "0,z;z,1"]), false).unwrap();
        assert_eq!(construct(&spec).unwrap().order(), 9);
        let spec = parse_family("rees0", &args(&["Z2", "2", "1", "0,z"]), false).unwrap();
        assert!(matches!(construct(&spec), Err(Error::Regularity(_))));
        let spec = parse_family("rees", &args(&["Z1", "2", "2", "0,0;0,0"]), false).unwrap();
        assert_eq!(construct(&spec).unwrap().order(), 4);
    }

    #[test]
    fn group_and_two_left_zeros() {
        let g = construct(&parse_family("group", &args(&["Z2xZ2"]), false).unwrap()).unwrap();
        assert_eq!(g.order(), 4);
        let spec = parse_family("group-two-left-zeros", &args(&["Z2", "0,1"]), true).unwrap();
        assert_eq!(construct(&spec).unwrap().order(), 4);
        let spec = parse_family("group-two-left-zeros", &args(&["Z3"]), true).unwrap();
        assert!(matches!(construct(&spec), Err(Error::Associativity { .. })));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(parse_family("left-zero", &args(&[]), false).is_err());
        assert!(parse_family("left-zero", &args(&["x"]), false).is_err());
        assert!(parse_family("nope", &args(&["1"]), false).is_err());
        assert!(parse_family("group-two-left-zeros", &args(&["Z2", "0,2"]), false).is_err());
    }
}
