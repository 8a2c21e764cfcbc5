//! Bernoulli numbers, Bernoulli polynomials and their divided variants.
//!
//!     cargo run --example bernoulli_tables

use rbb::bernoulli::{bernoulli_number, bernoulli_poly, divided_bernoulli_poly};
use rbb::Rational;

fn main() {
    for n in 0..=12 {
        println!("B_{n:<2} = {}", bernoulli_number(n));
    }
    println!();
    for n in 0..=5 {
        println!("B_{n}(x) = {}", bernoulli_poly(n));
    }
    println!();
    for n in 1..=4 {
        println!("DB_{n}(x) = {}", divided_bernoulli_poly(n).unwrap());
    }

    // B_n(1) = (-1)^n B_n
    let b3 = bernoulli_poly(3);
    assert!(b3.eval(&Rational::one()).is_zero());
    println!("\nB_3(1/2) = {}", b3.eval(&Rational::frac(1, 2)));
}
