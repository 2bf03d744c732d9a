// temporary profiling scratch - will be removed
use std::time::Instant;
use uaw_core::*;
use uaw_core::hom::natural_monomial_table;
use uaw_core::delta::{sigma, rho};
use uaw_core::coeff::RatQ;

#[test]
#[ignore]
fn profile_diagram_parts() {
    let t0 = Instant::now();
    let images = NaturalImages::canonical();
    let table = natural_monomial_table(&images, 1, 6);
    println!("table ({} entries): {:?}", table.len(), t0.elapsed());

    let t1 = Instant::now();
    let mut acc = 0usize;
    for (m, _nat) in &table {
        let d = DeltaElement::monomial(*m, RatQ::one());
        let sd = sigma(&d);
        acc += sd.term_count();
    }
    println!("sigma(d) all: {:?} ({acc})", t1.elapsed());

    let t2 = Instant::now();
    let mut acc2 = 0usize;
    for (m, _nat) in &table {
        let d = DeltaElement::monomial(*m, RatQ::one());
        let nd = natural_with(&images, &sigma(&d));
        acc2 += nd.term_count();
    }
    println!("natural(sigma(d)) all: {:?} ({acc2})", t2.elapsed());

    let t3 = Instant::now();
    let mut acc3 = 0usize;
    for (_m, nat) in &table {
        acc3 += nat.sigma_swap().term_count();
    }
    println!("sigma_swap all: {:?} ({acc3})", t3.elapsed());

    let t4 = Instant::now();
    let mut acc4 = 0usize;
    for (m, _nat) in &table {
        let d = DeltaElement::monomial(*m, RatQ::one());
        let nd = natural_with(&images, &rho(&d));
        acc4 += nd.term_count();
    }
    println!("natural(rho(d)) all: {:?} ({acc4})", t4.elapsed());

    let t5 = Instant::now();
    let mut acc5 = 0usize;
    for (_m, nat) in &table {
        acc5 += nat.rho_cycle().unwrap().term_count();
    }
    println!("rho_cycle all: {:?} ({acc5})", t5.elapsed());
}

#[test]
#[ignore]
fn profile_ratq_ops() {
    use uaw_core::coeff::RatQ;
    // typical coefficients after rewriting: num/den with (q^2-1)-type factors
    let qm = RatQ::q_minus_q_inv();
    let a = (RatQ::q_pow(3) - RatQ::q_pow(-2)) / (qm.pow(2));
    let b = (RatQ::q_pow(2) + RatQ::from_int(3)) / (RatQ::q_plus_q_inv() * RatQ::q_pow(-2));
    let t = Instant::now();
    let mut acc = RatQ::zero();
    for _ in 0..100_000 {
        acc = &acc + &(&a * &b);
    }
    println!("100k mul+add: {:?} (acc {})", t.elapsed(), acc.is_zero());

    let t = Instant::now();
    let mut acc2 = RatQ::one();
    for _ in 0..100_000 {
        acc2 = &acc2 * &a;
        if acc2.numerator().degree().map_or(false, |d| d > 40) {
            acc2 = RatQ::one();
        }
    }
    println!("100k mul w/ degree growth: {:?}", t.elapsed());
}

#[test]
#[ignore]
fn profile_to_equitable() {
    use uaw_core::hom::natural_monomial_table;
    let images = NaturalImages::canonical();
    let table = natural_monomial_table(&images, 1, 6);
    // warm the caches
    let _ = table[40].1.rho_cycle().unwrap();
    let t = Instant::now();
    let mut groups = 0usize;
    let mut terms = 0usize;
    for (_, nat) in &table {
        for (_, u) in nat.by_abc_monomial() {
            groups += 1;
            terms += u.to_equitable().term_count();
        }
    }
    println!("to_equitable over {} groups: {:?} ({} terms)", groups, t.elapsed(), terms);
}

#[test]
#[ignore]
fn profile_cap2_and_ranks() {
    use uaw_core::hom::natural_monomial_table;
    let t0 = Instant::now();
    let images = NaturalImages::canonical();
    let table = natural_monomial_table(&images, 2, 12);
    println!("cap2 table ({} entries): {:?}", table.len(), t0.elapsed());

    let t1 = Instant::now();
    for (m, nat) in table.iter().take(100) {
        let d = DeltaElement::monomial(*m, uaw_core::coeff::RatQ::one());
        let lhs = natural(&sigma(&d));
        assert_eq!(lhs, nat.sigma_swap(), "sigma diagram fails at {}", m);
    }
    println!("sigma check first 100: {:?}", t1.elapsed());

    let t2 = Instant::now();
    for (m, nat) in table.iter().take(50) {
        let d = DeltaElement::monomial(*m, uaw_core::coeff::RatQ::one());
        let lhs = natural(&rho(&d));
        assert_eq!(lhs, nat.rho_cycle().unwrap(), "rho diagram fails at {}", m);
    }
    println!("rho check first 50: {:?}", t2.elapsed());

    let t3 = Instant::now();
    let r = injectivity_rank_check(2, &RankMode::Symbolic).unwrap();
    println!("symbolic rank bound 2: {:?} pass={} ({}x{})", t3.elapsed(), r.pass, r.monomials, r.rank);

    let t4 = Instant::now();
    let q = num_rational::BigRational::new(2.into(), 1.into());
    let r = injectivity_rank_check(3, &RankMode::Specialized { q }).unwrap();
    println!("specialized rank bound 3 (q=2): {:?} pass={} ({} monomials)", t4.elapsed(), r.pass, r.monomials);

    let t5 = Instant::now();
    let q = num_rational::BigRational::new(3.into(), 2.into());
    let r = injectivity_rank_check(3, &RankMode::Specialized { q }).unwrap();
    println!("specialized rank bound 3 (q=3/2): {:?} pass={}", t5.elapsed(), r.pass);
}

#[test]
#[ignore]
fn profile_cap2_table_only() {
    use uaw_core::hom::natural_monomial_table;
    let t0 = Instant::now();
    let images = NaturalImages::canonical();
    let table = natural_monomial_table(&images, 2, 12);
    let coords: usize = table.iter().map(|(_, t)| t.terms().map(|(_, l)| l.term_count()).sum::<usize>()).sum();
    println!("cap2 table ({} entries, {} coords): {:?}", table.len(), coords, t0.elapsed());
}

#[test]
#[ignore]
fn profile_sym_rank2_only() {
    let t3 = Instant::now();
    let r = injectivity_rank_check(2, &RankMode::Symbolic).unwrap();
    println!("symbolic rank bound 2: {:?} pass={} ({} monomials rank {})", t3.elapsed(), r.pass, r.monomials, r.rank);
}

#[test]
#[ignore]
fn profile_biggest_monomial() {
    let t0 = Instant::now();
    let m = DeltaMono::new(2, 2, 2, 0, 0, 0);
    let img = natural(&DeltaElement::monomial(m, uaw_core::coeff::RatQ::one()));
    let coords: usize = img.terms().map(|(_, l)| l.term_count()).sum();
    println!("nat(A2B2C2): {} pbw keys, {} coords: {:?}", img.term_count(), coords, t0.elapsed());

    let t1 = Instant::now();
    let m2 = DeltaMono::new(2, 2, 2, 2, 2, 2);
    let img2 = natural(&DeltaElement::monomial(m2, uaw_core::coeff::RatQ::one()));
    let coords2: usize = img2.terms().map(|(_, l)| l.term_count()).sum();
    println!("nat(full exp-2): {} pbw keys, {} coords: {:?}", img2.term_count(), coords2, t1.elapsed());

    let t2 = Instant::now();
    let s = img2.sigma_swap();
    println!("sigma_swap of it: {:?} ({} keys)", t2.elapsed(), s.term_count());

    let t3 = Instant::now();
    let r = img2.rho_cycle().unwrap();
    println!("rho_cycle of it: {:?} ({} keys)", t3.elapsed(), r.term_count());

    let t4 = Instant::now();
    let sd = sigma(&DeltaElement::monomial(m2, uaw_core::coeff::RatQ::one()));
    let lhs = natural(&sd);
    println!("natural(sigma(m2)): {:?} ({} delta terms)", t4.elapsed(), sd.term_count());
    assert_eq!(lhs, s);
}

#[test]
#[ignore]
fn profile_stepwise() {
    use uaw_core::TensorName;
    let a2 = TensorElement::named(TensorName::ANat).pow(2);
    let co = |t: &TensorElement| t.terms().map(|(_, l)| l.term_count()).sum::<usize>();
    println!("A2: {} keys {} coords", a2.term_count(), co(&a2));
    let t = Instant::now();
    let ab = a2.mul(&TensorElement::named(TensorName::BNat));
    println!("A2B: {} keys {} coords {:?}", ab.term_count(), co(&ab), t.elapsed());
    let t = Instant::now();
    let ab2 = ab.mul(&TensorElement::named(TensorName::BNat));
    println!("A2B2: {} keys {} coords {:?}", ab2.term_count(), co(&ab2), t.elapsed());
    let t = Instant::now();
    let abc = ab2.mul(&TensorElement::named(TensorName::CNat));
    println!("A2B2C: {} keys {} coords {:?}", abc.term_count(), co(&abc), t.elapsed());
    let t = Instant::now();
    let abc2 = abc.mul(&TensorElement::named(TensorName::CNat));
    println!("A2B2C2: {} keys {} coords {:?}", abc2.term_count(), co(&abc2), t.elapsed());
    let t = Instant::now();
    let al = abc2.mul(&TensorElement::named(TensorName::AlphaNat));
    println!("x al: {} keys {} coords {:?}", al.term_count(), co(&al), t.elapsed());
    let t = Instant::now();
    let al2 = al.mul(&TensorElement::named(TensorName::AlphaNat));
    println!("x al2: {} keys {} coords {:?}", al2.term_count(), co(&al2), t.elapsed());
}

#[test]
#[ignore]
fn profile_cap2_diagrams() {
    let t = Instant::now();
    let s = check_sigma_diagram(2, 4);
    println!("sigma diagram cap2: {:?} checked={} factor={} direct={} pass={}", t.elapsed(), s.checked, s.factor_checked, s.directly_checked, s.pass());
    let t = Instant::now();
    let r = check_rho_diagram(2, 4);
    println!("rho diagram cap2: {:?} checked={} factor={} direct={} pass={}", t.elapsed(), r.checked, r.factor_checked, r.directly_checked, r.pass());
}

#[test]
#[ignore]
fn profile_cap2_single_table() {
    use uaw_core::hom::for_each_image;
    let t = Instant::now();
    let images = NaturalImages::canonical();
    let mut count = 0usize;
    let mut coords = 0usize;
    for_each_image(&images, 2, 12, |_, img| {
        count += 1;
        coords += img.terms().map(|(_, l)| l.term_count()).sum::<usize>();
    });
    println!("cap2 single table: {} entries {} coords {:?}", count, coords, t.elapsed());
}
