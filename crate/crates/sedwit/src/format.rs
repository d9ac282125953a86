//! Number formatting shared by text output and CSV.

/// `x` with 12 significant digits, `%.12g` style: fixed notation for
/// exponents in `-5..12`, scientific otherwise, trailing zeros dropped.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sig12(5.0 / 7.0), "0.714285714286");
        assert_eq!(sig12(-0.25), "-0.25");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(121.0), "121");
        assert_eq!(sig12(1.0e-12), "1e-12");
        assert_eq!(sig12(-3.0e-7), "-3e-7");
        assert_eq!(sig12(0.95), "0.95");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig12(0.999999999999999), "1");
    }
}
