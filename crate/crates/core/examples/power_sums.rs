//! Faulhaber polynomials F_n(m) = 1^n + ... + m^n, two ways.

use rbb::bernoulli::{power_sum_literal, power_sum_poly, power_sum_via_bernoulli};
use rbb::Rational;

fn main() {
    for n in 0..=6 {
        let f = power_sum_poly(n);
        assert_eq!(f, power_sum_via_bernoulli(n));
        println!("F_{n} = {}", f.display_with("m"));
    }

    let f10 = power_sum_poly(10);
    let m = 1000;
    let value = f10.eval(&Rational::from(m));
    assert_eq!(value, power_sum_literal(10, m as u64));
    println!("\n1^10 + ... + {m}^10 = {value}");
}
// F_0 = m
// F_1 = 1/2*m^2 + 1/2*m
// ...
