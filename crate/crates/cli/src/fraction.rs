use greedy_mis::Rational;
use serde::{Deserialize, Serialize};

/// Exact rational plus a display-only decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
    pub decimal: String,
}

impl From<Rational> for Fraction {
    fn from(r: Rational) -> Self {
        Self { num: *r.numer(), den: *r.denom(), decimal: decimal(r, 6) }
    }
}

/// `r` rounded half away from zero to `places` digits, by integer
/// arithmetic only.
pub fn decimal(r: Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let (num, den) = (*r.numer() as i128, *r.denom() as i128);
    let scaled = (2 * num.abs() * scale + den) / (2 * den);
    let sign = if num < 0 && scaled != 0 { "-" } else { "" };
    let (whole, frac) = (scaled / scale, scaled % scale);
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0width$}", width = places as usize)
    }
}

/// `num/den` in lowest terms.
pub fn slash(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
