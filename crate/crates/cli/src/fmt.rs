use num_bigint::BigUint;

fn superscript(mut e: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut out = Vec::new();
    while e > 0 {
        out.push(DIGITS[(e % 10) as usize]);
        e /= 10;
    }
    out.iter().rev().collect()
}

/// Prime factorization by trial division, e.g. 2⁵·3·5²·7⁴.
pub fn factored(n: &BigUint) -> String {
    if *n <= BigUint::from(1u32) {
        return n.to_string();
    }
    let mut n = n.clone();
    let mut parts = Vec::new();
    let mut p = 2u32;
    while n > BigUint::from(1u32) {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            parts.push(n.to_string());
            break;
        }
        let mut e = 0;
        while (&n % &bp) == BigUint::ZERO {
            n /= &bp;
            e += 1;
        }
        if e == 1 {
            parts.push(p.to_string());
        } else if e > 1 {
            parts.push(format!("{p}{}", superscript(e)));
        }
        p += 1;
    }
    parts.join("·")
}

/// r^e written with a superscript exponent.
pub fn power(r: u32, e: u32) -> String {
    format!("{r}{}", superscript(e))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
