//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any fails. Every tolerance is exact equality; runtimes are bounded.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exnil::differential::{
    cohomology_dims, deformed_ideal_check, deformed_total_dim, restrict_check, sym_ident_check, Differential,
    RootMultiset,
};
use exnil::divdiff::{dd_perm, dual_schubert, schubert, schur_det_mixed};
use exnil::extsym::{
    decompose, e_and_h_check, eh_lemma_check, exterior_basis, exterior_gen, hw, is_extended_symmetric,
    is_unitriangular, reconstruct, satisfies_coefficient_system, wedge_monomial, Family,
};
use exnil::linalg::rank;
use exnil::nilhecke::{ext_identity, ext_mat_mul, idempotents, matrix_iso, matrix_iso_inv, relation_suite};
use exnil::parse::{parse_poly, parse_superpoly};
use exnil::poly::Polynomial;
use exnil::random;
use exnil::solomon::{
    e_tuple, exterior_derivative, h_tuple, hq_inverse_check, lemma_triple_check, symmetric_generators, DiffForm,
    FDegrees, JMap,
};
use exnil::{BinSeq, GradedDims, NhElem, Perm, Poly, Rat, Scalar, SuperPoly};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str, n: usize) -> Poly {
    parse_poly(s, n).expect("literal")
}

fn word(n: usize, w: &str) -> Perm {
    let letters: Vec<usize> = w.split_whitespace().filter(|t| *t != "id").map(|t| t[1..].parse().unwrap()).collect();
    Perm::from_word(n, &letters).unwrap()
}

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + salt)
}

fn schubert_tables() -> Outcome {
    let schub = [("id", "1"), ("s1", "x1"), ("s2", "x1 + x2"), ("s1 s2", "x1*x2"), ("s2 s1", "x1^2"), ("s1 s2 s1", "x1^2*x2")];
    for (w, f) in schub {
        let got = schubert::<Rat>(&word(3, w));
        ensure(got == p(f, 3), || format!("S_{} = {}, expected {}", w, got, f))?;
    }
    // Column Ŝ_{w0 w} of the reference table.
    let dual = [("id", "1"), ("s1", "-x2 - x3"), ("s2", "-x3"), ("s1 s2", "x3^2"), ("s2 s1", "x2*x3"), ("s1 s2 s1", "x2*x3^2")];
    let w0 = Perm::longest(3);
    let mut erratum = None;
    for (w, f) in dual {
        let got = dual_schubert::<Rat>(&w0.compose(&word(3, w)));
        if got == p(f, 3) {
            continue;
        }
        ensure(w == "s1 s2 s1" && got == -p(f, 3), || format!("dual at w0*{} = {}, expected {}", w, got, f))?;
        erratum = Some(got);
    }
    // The sign of Ŝ_id is pinned by its defining characterisation:
    // ∂_{w0}(S_u Ŝ_v) = δ_uv and ∂_u Ŝ_w = Ŝ_{w u^-1} when lengths add.
    let perms = Perm::all(3);
    for u in &perms {
        for v in &perms {
            let pair = dd_perm(&w0, &(&schubert::<Rat>(u) * &dual_schubert::<Rat>(v))).unwrap();
            ensure(pair == if u == v { Poly::one(3) } else { Poly::zero(3) }, || format!("pairing ({}, {}) = {}", u, v, pair))?;
            let wu = v.compose(&u.inverse());
            if wu.length() == v.length() + u.length() {
                let lhs = dd_perm(u, &dual_schubert::<Rat>(v)).unwrap();
                ensure(lhs == dual_schubert(&wu), || format!("∂_{} Ŝ_{} = {}", u, v, lhs))?;
            }
        }
    }
    Ok(match erratum {
        Some(g) => format!(
            "6/6 Schubert exact; 5/6 dual exact, dual at w0 row is {} (reference prints the opposite sign; pairing and characterisation confirm {})",
            g, g
        ),
        None => "6/6 Schubert, 6/6 dual exact".into(),
    })
}

fn relations() -> Outcome {
    let mut total = 0;
    for n in 1..=4 {
        for r in relation_suite::<Rat>(n, 4) {
            ensure(r.holds, || format!("n={}: {} fails", n, r.name))?;
            total += 1;
        }
        for i in 1..n {
            for a in 0..=4 {
                ensure(exnil::divdiff::dotslide_check(n, i, a, 3).unwrap(), || format!("operator dot-slide n={} i={} a={}", n, i, a))?;
            }
        }
    }
    // The action on exterior polynomials is a representation.
    let mut r = rng(2);
    for n in 1..=3 {
        for _ in 0..10 {
            let a = random::nh_element::<Rat, _>(&mut r, n, 1, 3);
            let b = random::nh_element::<Rat, _>(&mut r, n, 1, 3);
            let v = random::superpoly::<Rat, _>(&mut r, n, 2, 3);
            let lhs = (&a * &b).act(&v).unwrap();
            let rhs = a.act(&b.act(&v).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("action not multiplicative at n={}", n))?;
        }
    }
    Ok(format!("{} relations normalise to zero for n<=4, operator dot-slide a<=4, action is multiplicative", total))
}

fn random_coords(r: &mut ChaCha8Rng, n: usize) -> BTreeMap<u32, Poly> {
    let mut coords = BTreeMap::new();
    for m in 0..1u32 << n {
        if r.gen_bool(0.5) {
            let c = random::symmetric::<Rat, _>(r, n, 2);
            if !c.is_zero() {
                coords.insert(m, c);
            }
        }
    }
    coords
}

fn rank_two_to_n() -> Outcome {
    let mut r = rng(3);
    let mut bases = 0;
    let mut trials = 0;
    for n in 2..=4 {
        let mut fams = vec![Family::Schubert, Family::Dual];
        fams.extend((0..n).map(Family::Interp));
        let point: Vec<Rat> = (0..n).map(|i| Rat::from_int(2 * i as i64 + 3)).collect();
        let mut all_gens = Vec::new();
        for fam in fams {
            let gens = exterior_basis::<Rat>(n, fam);
            ensure(gens.iter().all(is_extended_symmetric), || format!("{} n={} not invariant", fam, n))?;
            ensure(is_unitriangular(&gens), || format!("{} n={} not unitriangular", fam, n))?;
            // Rank of the 2^n wedge monomials at a rational point.
            let rows: Vec<Vec<Rat>> = (0..1u32 << n)
                .map(|m| {
                    let w = wedge_monomial(&gens, m);
                    (0..1u32 << n).map(|b| w.component(b).eval(&point)).collect()
                })
                .collect();
            ensure(rank(&rows) == 1 << n, || format!("{} n={} rank {}", fam, n, rank(&rows)))?;
            bases += 1;
            all_gens.push(gens);
        }
        for t in 0..100 {
            let gens = &all_gens[t % all_gens.len()];
            let coords = random_coords(&mut r, n);
            let v = reconstruct(&coords, gens);
            let back = decompose(&v, gens).map_err(|e| e.to_string())?;
            ensure(back == coords, || format!("decompose(reconstruct) differs at n={}", n))?;
            ensure(reconstruct(&back, gens) == v, || "reconstruct(decompose) differs".into())?;
            trials += 1;
        }
    }
    Ok(format!("{} bases of rank 2^n for n=2..4, {} decompose/reconstruct round trips", bases, trials))
}

fn membership_equivalence() -> Outcome {
    let mut r = rng(4);
    let mut agree = 0;
    let mut negatives = 0;
    for n in 1..=3 {
        let mut fams = vec![Family::Schubert, Family::Dual];
        fams.extend((0..n).map(Family::Interp));
        for t in 0..200 {
            let gens = exterior_basis::<Rat>(n, fams[t % fams.len()]);
            let mut v = random::invariant(&mut r, &gens, 2);
            let invariant = t % 2 == 0;
            if !invariant {
                v = &v + &random::superpoly(&mut r, n, 2, 1 + t % 3);
            }
            let kernel = is_extended_symmetric(&v);
            let system = satisfies_coefficient_system(&v);
            ensure(kernel == system, || format!("tests disagree on {}", v))?;
            ensure(!invariant || kernel, || format!("invariant input rejected: {}", v))?;
            negatives += usize::from(!kernel);
            agree += 1;
        }
    }
    Ok(format!("{} inputs agree ({} non-invariant)", agree, negatives))
}

fn restriction() -> Outcome {
    let mut cases = 0;
    for n in 1..=4 {
        for big_n in (n - 1).max(1)..=6 {
            let d = Differential::<Rat>::undeformed(n, big_n).unwrap();
            for i in 1..=n {
                // `ω̂_i = h^ω_{n+1-i}`.
                let lhs = d.apply_ext(&hw(n, n + 1 - i)).unwrap();
                let h = if big_n + 1 >= i { Poly::complete(n, big_n + 1 - i, 1, n) } else { Poly::zero(n) };
                let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
                ensure(lhs == SuperPoly::from_poly(h.scale(&sign)), || format!("n={} N={} i={}: {}", n, big_n, i, lhs))?;
                cases += 1;
            }
            ensure(restrict_check(n, big_n).unwrap(), || format!("restrict_check n={} N={}", n, big_n))?;
        }
    }
    let expected = ["w3", "w2 - x3*w3", "w1 - (x2 + x3)*w2 + x3^2*w3"];
    for (j, form) in expected.iter().enumerate() {
        let want = parse_superpoly::<Rat>(form, 3).unwrap();
        ensure(hw::<Rat>(3, j + 1) == want, || format!("h^w_{} = {}", j + 1, hw::<Rat>(3, j + 1)))?;
    }
    for big_n in 2..=6 {
        let d = Differential::<Rat>::undeformed(3, big_n).unwrap();
        let h = |k: usize| Poly::complete(3, k, 1, 3);
        let want = [-h(big_n - 2), h(big_n - 1), -h(big_n)];
        for j in 1..=3 {
            let got = d.apply_ext(&hw(3, j)).unwrap();
            ensure(got == SuperPoly::from_poly(want[j - 1].clone()), || format!("worked example N={} j={}: {}", big_n, j, got))?;
        }
    }
    Ok(format!("{} cases d_N(h^w_(n+1-i)) = (-1)^i h_(N-i+1); n=3 worked example exact for N=2..6", cases))
}

/// Coefficients of `[N choose n]` in `q^2`, by counting partitions in an
/// `n x (N-n)` box.
fn box_partitions(n: usize, big_n: usize) -> GradedDims {
    fn rec(rows: usize, max: usize, size: usize, out: &mut BTreeMap<i64, usize>) {
        if rows == 0 {
            *out.entry(2 * size as i64).or_default() += 1;
            return;
        }
        for part in 0..=max {
            rec(rows - 1, part, size + part, out);
        }
    }
    let mut out = BTreeMap::new();
    rec(n, big_n - n, 0, &mut out);
    GradedDims::from_degrees(out.into_iter().flat_map(|(d, c)| std::iter::repeat_n(d, c)))
}

fn grassmannian() -> Outcome {
    let mut lines = Vec::new();
    for (n, big_n) in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5)] {
        let t = Instant::now();
        let rep = cohomology_dims(n, big_n, None, None).map_err(|e| e.to_string())?;
        let want = box_partitions(n, big_n);
        ensure(rep.poincare == want, || format!("({},{}): {} vs {}", n, big_n, rep.poincare, want))?;
        ensure(rep.positive_exterior_vanishes && rep.total(1) == 0, || format!("({},{}) positive exterior degree", n, big_n))?;
        ensure(rep.euler_ok, || format!("({},{}) Euler characteristic", n, big_n))?;
        if (n, big_n) == (2, 4) {
            ensure(t.elapsed() < Duration::from_secs(60), || "(2,4) over 60 s".into())?;
        }
        lines.push(format!("({},{}): {}", n, big_n, rep.poincare));
    }
    Ok(lines.join("; "))
}

fn deformed_dims() -> Outcome {
    let s = RootMultiset::<Rat>::from_roots(&[(Rat::from_int(0), 2), (Rat::from_int(1), 2)]).map_err(|e| e.to_string())?;
    let rep = deformed_total_dim(2, &s).map_err(|e| e.to_string())?;
    let binom = 4 * 3 / 2;
    ensure(rep.total == 6 && rep.total == binom, || format!("total {}", rep.total))?;
    let dims: Vec<usize> = rep.blocks.iter().map(|b| b.1).collect();
    ensure(dims == vec![1, 4, 1], || format!("blocks {:?}", dims))?;
    ensure(rep.consistent(), || "block dims differ from products of binomials".into())?;
    let coh = cohomology_dims(2, 4, Some(&s), None).map_err(|e| e.to_string())?;
    ensure(coh.poincare.total() == 6, || format!("deformed cohomology total {}", coh.poincare.total()))?;
    Ok(format!("total {} = C(4,2), blocks {:?}, deformed complex total {}", rep.total, dims, coh.poincare.total()))
}

fn idempotent_decomposition() -> Outcome {
    let mut r = rng(8);
    let mut pairs = 0;
    for n in 1..=3 {
        let ids = idempotents::<Rat>(n, 3).map_err(|e| e.to_string())?;
        let fact: usize = (1..=n).product();
        ensure(ids.len() == fact, || format!("n={}: {} idempotents", n, ids.len()))?;
        let mut sum = NhElem::zero(n);
        for (i, (_, a)) in ids.iter().enumerate() {
            ensure(!a.is_zero(), || "zero idempotent".into())?;
            sum = &sum + a;
            for (j, (_, b)) in ids.iter().enumerate() {
                let ab = a * b;
                let ok = if i == j { &ab == a } else { ab.is_zero() };
                ensure(ok, || format!("n={}: e_{} e_{} wrong", n, i, j))?;
            }
        }
        ensure(sum == NhElem::one(n), || format!("n={}: sum is {}", n, sum))?;
        let size = fact;
        ensure(matrix_iso(&NhElem::one(n)).unwrap() == ext_identity(n, size), || "identity not sent to identity".into())?;
        for _ in 0..50 {
            let a = random::nh_element::<Rat, _>(&mut r, n, 1, 3);
            let b = random::nh_element::<Rat, _>(&mut r, n, 1, 3);
            let (ma, mb) = (matrix_iso(&a).unwrap(), matrix_iso(&b).unwrap());
            ensure(matrix_iso(&(&a * &b)).unwrap() == ext_mat_mul(&ma, &mb), || format!("n={}: not multiplicative", n))?;
            ensure(matrix_iso_inv(n, &ma).unwrap() == a, || format!("n={}: inverse fails", n))?;
            pairs += 1;
        }
    }
    Ok(format!("n!=1,2,6 orthogonal idempotents summing to 1; {} random pairs multiplicative", pairs))
}

fn identities() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        ensure(e_and_h_check(n), || format!("e^w/h^w n={}", n))?;
        for j in 1..=n {
            for k in 0..=j {
                ensure(eh_lemma_check(n, j, k), || format!("e-h lemma n={} j={} k={}", n, j, k))?;
                count += 1;
            }
        }
        for a in BinSeq::all(n) {
            let det = schur_det_mixed::<Rat>(&a);
            let zeros = n - a.weight();
            let s = if zeros == 0 { Poly::one(n) } else { Polynomial::schur(n, &a.lambda_of(), 1, zeros) };
            ensure(det == s, || format!("mixed determinant at {}: {} vs {}", a, det, s))?;
            count += 1;
        }
    }
    for n in 1..=4 {
        for big_n in 1..=6 {
            for i in 1..=n {
                ensure(sym_ident_check(n, big_n, i).unwrap(), || format!("sym identity n={} N={} i={}", n, big_n, i))?;
                count += 1;
            }
        }
    }
    Ok(format!("{} identity instances exact", count))
}

fn solomon() -> Outcome {
    for n in 1..=4 {
        ensure(hq_inverse_check(n), || format!("H Q or E Q~ at n={}", n))?;
    }
    let mut r = rng(10);
    let mut coords = 0;
    for n in 1..=3 {
        let f = symmetric_generators::<Rat>(n, FDegrees::Shifted);
        let dfs: Vec<DiffForm<Rat>> = f.iter().map(exterior_derivative).collect();
        for (name, tuple) in [("h", h_tuple::<Rat>(n)), ("e", e_tuple::<Rat>(n))] {
            let j = JMap::new(&tuple, &f).map_err(|e| e.to_string())?;
            ensure(j.equivariance_check(), || format!("{} equivariance n={}", name, n))?;
            let gens = exterior_gen(&tuple).unwrap();
            for _ in 0..5 {
                let v = random::invariant(&mut r, &gens, 2);
                ensure(j.coordinates_check(&v, &tuple).unwrap(), || format!("{} coordinates n={}", name, n))?;
                coords += 1;
            }
            let theta: Vec<DiffForm<Rat>> = (1..=n).map(|i| j.image(i).clone()).collect();
            let t = lemma_triple_check(j.matrix(), &theta, &dfs).map_err(|e| e.to_string())?;
            ensure(t.a && t.b && t.c && t.implications_hold, || format!("{} triple n={}: {:?}", name, n, t))?;
        }
    }
    Ok(format!("H Q = E Q~ = Id for n<=4; equivariance, {} coordinate checks and triple implications for n<=3", coords))
}

fn ideal_membership() -> Outcome {
    let mut r = rng(11);
    let fixed = [Rat::from_int(1), Rat::new(1.into(), 2.into()), Rat::from_int(0), Rat::from_int(-2)];
    let mut runs = 0;
    for n in 1..=3 {
        for big_n in 1..=4 {
            let mut sigmas = vec![RootMultiset::<Rat>::undeformed(big_n).unwrap(), RootMultiset::from_kappas(fixed[..big_n].to_vec()).unwrap()];
            if (n, big_n) == (3, 4) {
                let ks: Vec<Rat> = (0..big_n).map(|_| random::rational(&mut r, 5)).collect();
                sigmas.push(RootMultiset::from_kappas(ks).unwrap());
            }
            for s in &sigmas {
                let rep = deformed_ideal_check(n, s, 2).map_err(|e| e.to_string())?;
                ensure(rep.all(), || format!("n={} N={} kappa={:?}: {:?}", n, big_n, s.kappas(), rep))?;
                runs += 1;
            }
        }
    }
    Ok(format!("parts (1)-(4) certified in {} (n, N, kappa) settings incl. a random rational kappa", runs))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "Schubert tables", limit: secs(1), run: schubert_tables },
        Criterion { id: 2, name: "Relation suite", limit: secs(30), run: relations },
        Criterion { id: 3, name: "Rank 2^n", limit: secs(60), run: rank_two_to_n },
        Criterion { id: 4, name: "Membership equivalence", limit: None, run: membership_equivalence },
        Criterion { id: 5, name: "Differential restriction", limit: None, run: restriction },
        Criterion { id: 6, name: "Grassmannian cohomology", limit: None, run: grassmannian },
        Criterion { id: 7, name: "Deformed dimensions", limit: None, run: deformed_dims },
        Criterion { id: 8, name: "Idempotents", limit: None, run: idempotent_decomposition },
        Criterion { id: 9, name: "Identities", limit: None, run: identities },
        Criterion { id: 10, name: "Solomon", limit: None, run: solomon },
        Criterion { id: 11, name: "Ideal membership", limit: secs(120), run: ideal_membership },
    ];
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let mut res = (c.run)();
        let dt = t.elapsed();
        if let (Ok(_), Some(lim)) = (&res, c.limit) {
            if dt > lim {
                res = Err(format!("took {:.2?}, limit {:.0?}", dt, lim));
            }
        }
        match &res {
            Ok(msg) => println!("PASS {:>2} {:<26} {:>9.2?}  {}", c.id, c.name, dt, msg),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {:<26} {:>9.2?}  {}", c.id, c.name, dt, msg)
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
