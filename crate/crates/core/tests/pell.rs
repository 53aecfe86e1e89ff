use std::collections::BTreeSet;

use ffheight::census::CensusOptions;
use ffheight::ffalg::{PrimeField, UniPoly};
use ffheight::pell::*;
use ffheight::Error;

/// Small instances `(p, beta, gamma)` with coefficients lowest degree first.
pub const INSTANCES: &[(u64, &[i64], &[i64])] = &[
    (5, &[2, 0, 1], &[1]),
    (5, &[2, 0, 1], &[0, 1]),
    (5, &[1, 1, 1], &[-1, 1]),
    (7, &[1, 1, 1], &[2, -3, 1]),
    (7, &[3, 0, 1], &[1]),
    (5, &[1, 0, 0, 1, 1], &[1]),
    (7, &[1, 1, 1], &[0, 0, 1]),
    (5, &[3, 1, 1], &[2]),
    (7, &[5, 0, 1], &[3, 1]),
    (5, &[2, 1, 4], &[1, 0, 1]),
];

fn all_polys(f: PrimeField, max_deg: usize) -> Vec<UniPoly> {
    let q = f.p();
    let n = (q as usize).pow(max_deg as u32 + 1);
    (0..n)
        .map(|mut code| {
            let c: Vec<u64> = (0..=max_deg)
                .map(|_| {
                    let v = code as u64 % q;
                    code /= q as usize;
                    v
                })
                .collect();
            UniPoly::from_raw(f, c)
        })
        .collect()
}

fn brute_force(inst: &PellInstance, b: usize) -> BTreeSet<(Vec<u64>, Vec<u64>)> {
    let polys = all_polys(inst.field(), b);
    let mut out = BTreeSet::new();
    for x in &polys {
        for y in &polys {
            if inst.residual(x, y).is_zero() {
                out.insert((x.coeffs().to_vec(), y.coeffs().to_vec()));
            }
        }
    }
    out
}

fn instance(p: u64, beta: &[i64], gamma: &[i64]) -> PellInstance {
    let f = PrimeField::new(p).unwrap();
    PellInstance::new(UniPoly::from_i64(f, beta), UniPoly::from_i64(f, gamma)).unwrap()
}

#[test]
fn units_have_constant_norm() {
    for &(p, beta, gamma) in INSTANCES {
        let inst = instance(p, beta, gamma);
        let u = continued_fraction_unit(inst.beta()).unwrap();
        let n = &(&u.u * &u.u) - &(inst.beta() * &(&u.v * &u.v));
        assert_eq!(n, UniPoly::from_raw(inst.field(), vec![u.norm]), "beta = {}", inst.beta());
        assert!(!u.v.is_zero());
        let (a, c) = norm_one_unit(inst.beta(), &u);
        let one = &(&a * &a) - &(inst.beta() * &(&c * &c));
        assert_eq!(one, UniPoly::one(inst.field()));
    }
}

#[test]
fn solutions_match_brute_force() {
    for &(p, beta, gamma) in INSTANCES {
        let inst = instance(p, beta, gamma);
        for b in 1..=2 {
            let set = pell_solutions(&inst, b, &CensusOptions::default()).unwrap();
            let got: BTreeSet<(Vec<u64>, Vec<u64>)> = set
                .solutions
                .iter()
                .map(|(x, y)| (x.coeffs().to_vec(), y.coeffs().to_vec()))
                .collect();
            assert_eq!(got, brute_force(&inst, b), "beta = {}, gamma = {}, b = {b}", inst.beta(), inst.gamma());
            assert!(set.orbit_consistent, "beta = {}, gamma = {}", inst.beta(), inst.gamma());
        }
    }
}

#[test]
fn sqrt_series_squares_back() {
    let f = PrimeField::new(7).unwrap();
    let beta = UniPoly::from_i64(f, &[3, 2, 1, 5, 4]);
    let s = sqrt_series(&beta, 20).unwrap();
    let sq = s.mul(&s);
    for k in (sq.known_above() + 1)..=4 {
        assert_eq!(sq.coeff(k), Some(beta.coeff(k as usize)), "t^{k}");
    }
    assert!(matches!(
        sqrt_series(&UniPoly::from_i64(f, &[1, 0, 3]), 10),
        Err(Error::NoSqrtAtInfinity)
    ));
    assert_eq!(poly_sqrt(&UniPoly::from_i64(f, &[1, 2, 1])), Some(UniPoly::from_i64(f, &[1, 1])));
}

#[test]
fn rejects_bad_instances() {
    let f = PrimeField::new(5).unwrap();
    let one = UniPoly::one(f);
    assert!(matches!(
        PellInstance::new(UniPoly::from_i64(f, &[1, 2, 1]), one.clone()),
        Err(Error::SquareBeta)
    ));
    assert!(matches!(
        PellInstance::new(UniPoly::from_i64(f, &[2, 0, 1]), UniPoly::zero(f)),
        Err(Error::ZeroGamma)
    ));
    let f2 = PrimeField::new(2).unwrap();
    assert!(matches!(
        PellInstance::new(UniPoly::from_i64(f2, &[1, 1, 1]), UniPoly::one(f2)),
        Err(Error::CharacteristicTwo)
    ));
}

#[test]
fn family_has_two_to_the_n_solutions() {
    for n in 0..=3 {
        let q = find_family_prime(n, 5).unwrap();
        let fam = pell_family(n, q).unwrap();
        assert_eq!(fam.solutions.len(), 1 << n);
        assert!(fam.distinct && fam.norms_ok);
        assert!(fam.max_height() <= n + 1);
        let f = PrimeField::new(q).unwrap();
        let inst = PellInstance::new(family_beta(f), fam.gamma.clone()).unwrap();
        for (x, y) in &fam.solutions {
            // stored as (x, y) for y + x sqrt(beta)
            assert!(inst.residual(y, x).is_zero());
        }
    }
    assert!(matches!(pell_family(1, 2), Err(Error::CharacteristicTwo)));
}
