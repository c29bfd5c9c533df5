/// Renders a double with 17 significant digits, positionally when the
/// decimal exponent is in `-5..17` and in `e` notation otherwise.
pub fn fmt17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("e notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = mantissa.strip_prefix('-').map_or(("", mantissa), |m| ("-", m));
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    if exp >= 0 {
        let split = exp as usize + 1;
        let (int, frac) = digits.split_at(split);
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    }
}

#[cfg(test)]
mod tests {
    use super::fmt17;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt17(std::f64::consts::FRAC_PI_2), "1.5707963267948966");
        assert_eq!(fmt17(1.0), "1.0000000000000000");
        assert_eq!(fmt17(-0.001), "-0.0010000000000000000");
        assert_eq!(fmt17(123.5), "123.50000000000000");
        assert_eq!(fmt17(1e20), "1.0000000000000000e20");
        assert_eq!(fmt17(1e-7), "9.9999999999999995e-8");
    }

    #[test]
    fn round_trips() {
        for x in [0.1, 2.0f64.sqrt(), 1e-5 / 3.0, 1.0 / 3.0 * 1e16, -7.25e-3] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }
}
