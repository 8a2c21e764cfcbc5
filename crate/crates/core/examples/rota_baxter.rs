//! The summation operator on F[a], its phi image and rescalings, checked
//! against the Rota-Baxter axiom.

use rbb::rbop::{check_axiom, check_lemma, check_statement2, standard_rb};
use rbb::{BernoulliCache, Poly, Rational};

fn main() {
    let r = standard_rb();
    for n in 0..=3 {
        println!("R(a^{n}) = {}", r.image(n).display_with("a"));
    }

    let ops = [r.clone(), r.phi(), r.scale(&Rational::frac(-3, 2)).unwrap()];
    for op in &ops {
        let ok = (0..=10).all(|n| (0..=10).all(|m| check_axiom(op, n, m).is_zero()));
        println!("{:<22} weight {:>4}  axiom holds for n, m <= 10: {ok}", op.label(), op.weight().to_string());
    }

    // R(p)(m) = p(1) + ... + p(m)
    let p = Poly::from_i64(&[0, 0, 1]);
    println!("\nR(a^2) at a = 4: {}", r.apply(&p).eval(&Rational::from(4)));

    let cache = BernoulliCache::global();
    println!("closed form n = 7: {}", check_statement2(&r, 7, &cache).unwrap());
    println!("lemma n = 7: {}", check_lemma(7).unwrap());
}
