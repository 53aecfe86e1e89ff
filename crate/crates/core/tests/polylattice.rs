use ffheight::ffalg::{PrimeField, UniPoly};
use ffheight::polylattice::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn mat(f: PrimeField, rows: &[&[&str]]) -> PolyMatrix {
    let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    PolyMatrix::from_strings(f, &rows).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, f: PrimeField, m: usize, n: usize, deg: usize) -> PolyMatrix {
    loop {
        let rows = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let d = rng.gen_range(0..=deg);
                        UniPoly::from_raw(f, (0..=d).map(|_| rng.gen_range(0..f.p())).collect())
                    })
                    .collect()
            })
            .collect();
        let a = PolyMatrix::new(f, rows).unwrap();
        if a.rank() == m {
            return a;
        }
    }
}

#[test]
fn reduce_examples() {
    let f = f5();
    let r = reduce_basis(&mat(f, &[&["t", "0"], &["0", "t"]])).unwrap();
    assert_eq!(r.minima, [1, 1]);
    assert_eq!(r.height(), 2);
    let r = reduce_basis(&mat(f, &[&["1", "0"], &["t", "1"]])).unwrap();
    assert_eq!(r.minima, [0, 0]);
    let r = reduce_basis(&mat(f, &[&["1", "t^2"], &["0", "1"]])).unwrap();
    assert_eq!(r.minima, [0, 0]);
    assert!(matches!(
        reduce_basis(&mat(f, &[&["t", "1"], &["t^2", "t"]])),
        Err(ffheight::Error::NotABasis)
    ));
}

#[test]
fn height_examples() {
    let f = f5();
    // the Plücker height of the K-span of {(t,0),(0,t)} is that of K^2
    assert_eq!(lattice_height(&mat(f, &[&["t", "0"], &["0", "t"]])).unwrap(), 0);
    assert_eq!(lattice_height(&PolyMatrix::identity(f, 3)).unwrap(), 0);
    assert_eq!(lattice_height(&mat(f, &[&["1", "t"]])).unwrap(), 1);
    assert!(lattice_height(&mat(f, &[&["1", "t"], &["t", "t^2"]])).is_err());
}

#[test]
fn kernel_examples() {
    let f = f5();
    let a = mat(f, &[&["1", "t"]]);
    let k = kernel_lattice(&a).unwrap();
    assert_eq!(k.minima, [1]);
    assert_eq!(lattice_height(&k.vectors).unwrap(), 1);
    let v = short_kernel_vector(&a).unwrap();
    assert_eq!(v, [UniPoly::from_i64(f, &[0, -1]), UniPoly::one(f)]);

    let id = mat(f, &[&["1", "0", "0"], &["0", "1", "0"]]);
    let k = kernel_lattice(&id).unwrap();
    assert_eq!(k.minima, [0]);
    assert_eq!(k.vectors.row(0), [UniPoly::zero(f), UniPoly::zero(f), UniPoly::one(f)]);

    let a = mat(f, &[&["t - 1", "t + 1"]]);
    let v = short_kernel_vector(&a).unwrap();
    assert!(a.apply(&v).iter().all(|c| c.is_zero()));
    assert_eq!(vector_height(&v), 1);

    let a = mat(f, &[&["1", "t", "t^2"]]);
    let v = short_kernel_vector(&a).unwrap();
    assert!(vector_height(&v) <= 1);
    assert!(a.apply(&v).iter().all(|c| c.is_zero()));
}

#[test]
fn count_examples() {
    let f = f5();
    assert_eq!(linear_space_count(&mat(f, &[&["t", "0"], &["0", "t"]]), 3).unwrap(), 4);
    assert_eq!(linear_space_count(&PolyMatrix::identity(f, 2), 4).unwrap(), 8);
    assert_eq!(linear_space_count(&mat(f, &[&["1", "t^2"]]), 1).unwrap(), 0);
}

#[test]
fn saturation_and_echelon() {
    let f = PrimeField::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(3..=5));
        let a = random_matrix(&mut rng, f, m, n, 3);
        let e = column_echelon(&a).unwrap();
        assert_eq!(a.mul(&e.u).unwrap(), e.h);
        assert_eq!(e.u.mul(&e.u_inv).unwrap(), PolyMatrix::identity(f, n));
        let s = saturate(&a).unwrap();
        // same K-span: stacking does not raise the rank
        let mut rows = a.rows().to_vec();
        rows.extend(s.rows().iter().cloned());
        assert_eq!(PolyMatrix::new(f, rows).unwrap().rank(), m);
        // saturated: maximal minors are coprime
        let g = s.maximal_minors().iter().fold(UniPoly::zero(f), |g, c| g.gcd_or_zero(c));
        assert!(g.is_constant() && !g.is_zero());
        let r = reduce_basis(&s).unwrap();
        assert_eq!(r.height(), lattice_height(&a).unwrap());
    }
}

/// Oracle: enumerate coefficient vectors `lambda` and count the lattice
/// vectors of height `< b` they produce. Any such vector equals `v A_S^{-1}`
/// for a nonsingular square block `A_S`, so `deg lambda <= b - 1 + (m - 1) * 2`.
#[test]
fn count_matches_brute_force() {
    let f = PrimeField::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let (m, n) = (rng.gen_range(1..=2), rng.gen_range(2..=3));
        if m > n {
            continue;
        }
        let a = random_matrix(&mut rng, f, m, n, 2);
        for b in 1..=3usize {
            let mut hits = 0u64;
            let l = b + 2 * (m - 1);
            for code in 0..(1u64 << (m * l)) {
                let lambda: Vec<UniPoly> = (0..m)
                    .map(|i| UniPoly::from_raw(f, (0..l).map(|j| (code >> (i * l + j)) & 1).collect()))
                    .collect();
                let v = a.combine_rows(&lambda);
                if v.iter().all(|c| c.degree().is_none_or(|d| d < b)) {
                    hits += 1;
                }
            }
            let dim = hits.trailing_zeros() as usize;
            assert_eq!(1u64 << dim, hits);
            assert_eq!(linear_space_count(&a, b).unwrap(), dim, "{a:?} b={b}");
        }
    }
}
