//! Property suites behind `exnil verify`.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use exnil::differential::{
    cohomology_dims, deformed_ideal_check, deformed_total_dim, restrict_check, sym_ident_check, RootMultiset,
};
use exnil::divdiff::{dd_perm, dual_schubert, schubert, schur_det_mixed};
use exnil::extsym::{
    decompose, e_and_h_check, eh_lemma_check, exterior_basis, is_extended_symmetric, is_unitriangular,
    reconstruct, satisfies_coefficient_system, wedge_alpha_check, Family,
};
use exnil::nilhecke::{ext_mat_mul, idempotents, matrix_iso, relation_suite};
use exnil::parse::parse_poly;
use exnil::poly::Polynomial;
use exnil::random;
use exnil::solomon::{
    e_tuple, exterior_derivative, h_tuple, hq_inverse_check, lemma_triple_check, symmetric_generators, DiffForm,
    FDegrees, JMap,
};
use exnil::{AlgebraError, BinSeq, NhElem, Perm, Poly, Rat, Scalar};

use crate::Output;

type Check = Box<dyn Fn() -> anyhow::Result<bool> + Send + Sync>;

struct Item {
    suite: &'static str,
    name: String,
    check: Check,
}

fn item(suite: &'static str, name: impl Into<String>, check: impl Fn() -> anyhow::Result<bool> + Send + Sync + 'static) -> Item {
    Item { suite, name: name.into(), check: Box::new(check) }
}

/// Suite names with the largest `--max-n` and `--max-N` each accepts.
pub const SUITES: &[(&str, usize, usize)] = &[
    ("schubert", 5, usize::MAX),
    ("relations", 4, usize::MAX),
    ("bases", 4, usize::MAX),
    ("membership", 3, usize::MAX),
    ("restrict", 4, 8),
    ("cohomology", 3, 6),
    ("deformed", 3, 6),
    ("idempotents", 3, usize::MAX),
    ("identities", 5, 6),
    ("solomon", 4, usize::MAX),
    ("ideal", 3, 4),
];

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(salt))
}

fn p(s: &str, n: usize) -> Poly {
    parse_poly(s, n).expect("literal")
}

fn schubert_items(max_n: usize, out: &mut Vec<Item>) {
    out.push(item("schubert", "S_3 Schubert table", || {
        let table = [("id", "1"), ("s1", "x1"), ("s2", "x1 + x2"), ("s1 s2", "x1*x2"), ("s2 s1", "x1^2"), ("s1 s2 s1", "x1^2*x2")];
        Ok(table.iter().all(|(w, f)| {
            let w = word_perm(3, w);
            schubert::<Rat>(&w) == p(f, 3)
        }))
    }));
    out.push(item("schubert", "S_3 dual Schubert table", || {
        let table = [("id", "1"), ("s1", "-x2 - x3"), ("s2", "-x3"), ("s1 s2", "x3^2"), ("s2 s1", "x2*x3"), ("s1 s2 s1", "-x2*x3^2")];
        let w0 = Perm::longest(3);
        Ok(table.iter().all(|(w, f)| dual_schubert::<Rat>(&w0.compose(&word_perm(3, w))) == p(f, 3)))
    }));
    for n in 1..=max_n {
        out.push(item("schubert", format!("n={} duality pairing", n), move || {
            let w0 = Perm::longest(n);
            let perms = Perm::all(n);
            for u in &perms {
                for v in &perms {
                    let prod = &schubert::<Rat>(u) * &dual_schubert::<Rat>(v);
                    let pairing = dd_perm(&w0, &prod)?;
                    let want = if u == v { Poly::one(n) } else { Poly::zero(n) };
                    if pairing != want {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }));
    }
}

fn word_perm(n: usize, w: &str) -> Perm {
    if w == "id" {
        return Perm::identity(n);
    }
    let word: Vec<usize> = w.split_whitespace().map(|t| t[1..].parse().expect("literal")).collect();
    Perm::from_word(n, &word).expect("literal")
}

fn relation_items(max_n: usize, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        out.push(item("relations", format!("n={} defining relations, dot-slide a<=4", n), move || {
            Ok(relation_suite::<Rat>(n, 4).iter().all(|r| r.holds))
        }));
    }
}

fn families(n: usize) -> Vec<Family> {
    let mut f = vec![Family::Schubert, Family::Dual];
    f.extend((0..n).map(Family::Interp));
    f
}

fn basis_items(max_n: usize, seed: u64, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        for fam in families(n) {
            out.push(item("bases", format!("n={} {} rank 2^n, decompose", n, fam), move || {
                let gens = exterior_basis::<Rat>(n, fam);
                if !is_unitriangular(&gens) || !gens.iter().all(is_extended_symmetric) {
                    return Ok(false);
                }
                let mut r = rng(seed, n as u64);
                for _ in 0..10 {
                    let v = random::invariant(&mut r, &gens, 2);
                    if reconstruct(&decompose(&v, &gens)?, &gens) != v {
                        return Ok(false);
                    }
                }
                Ok(true)
            }));
        }
    }
}

fn membership_items(max_n: usize, seed: u64, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        out.push(item("membership", format!("n={} kernel test = coefficient test", n), move || {
            let mut r = rng(seed, 100 + n as u64);
            let gens = exterior_basis::<Rat>(n, Family::Schubert);
            for k in 0..100 {
                let mut v = random::invariant(&mut r, &gens, 2);
                let invariant = k % 2 == 0;
                if !invariant {
                    v = &v + &random::superpoly(&mut r, n, 2, 1);
                }
                let kernel = is_extended_symmetric(&v);
                if kernel != satisfies_coefficient_system(&v) || (invariant && !kernel) {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
    }
}

fn restrict_items(max_n: usize, max_big_n: usize, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        for big_n in (n - 1).max(1)..=max_big_n {
            out.push(item("restrict", format!("n={} N={} d_N on the complete generators", n, big_n), move || {
                Ok(restrict_check(n, big_n)?)
            }));
        }
    }
}

fn cohomology_items(max_n: usize, max_big_n: usize, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        for big_n in n.max(1)..=max_big_n {
            out.push(item("cohomology", format!("n={} N={} Gaussian binomial", n, big_n), move || {
                let rep = cohomology_dims(n, big_n, None, None)?;
                Ok(rep.matches_reference() && rep.positive_exterior_vanishes && rep.euler_ok)
            }));
        }
    }
}

fn deformed_items(max_n: usize, max_big_n: usize, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        for big_n in n.max(2)..=max_big_n {
            let a = big_n.div_ceil(2);
            out.push(item("deformed", format!("n={} roots 0^{} 1^{}", n, a, big_n - a), move || {
                let roots = [(Rat::from_int(0), a), (Rat::from_int(1), big_n - a)];
                let s = RootMultiset::from_roots(&roots)?;
                let rep = deformed_total_dim(n, &s)?;
                let coh = cohomology_dims(n, big_n, Some(&s), None)?;
                Ok(rep.consistent() && coh.matches_reference())
            }));
        }
    }
}

fn idempotent_items(max_n: usize, seed: u64, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        out.push(item("idempotents", format!("n={} orthogonal, complete, n! of them", n), move || {
            let ids = idempotents::<Rat>(n, 3)?;
            let fact: usize = (1..=n).product();
            let mut sum = NhElem::zero(n);
            for (i, (_, a)) in ids.iter().enumerate() {
                sum = &sum + a;
                for (j, (_, b)) in ids.iter().enumerate() {
                    let ab = a * b;
                    if (i == j && &ab != a) || (i != j && !ab.is_zero()) {
                        return Ok(false);
                    }
                }
            }
            Ok(ids.len() == fact && sum == NhElem::one(n))
        }));
        out.push(item("idempotents", format!("n={} matrix isomorphism multiplicative", n), move || {
            let mut r = rng(seed, 200 + n as u64);
            for _ in 0..10 {
                let a = random::nh_element::<Rat, _>(&mut r, n, 1, 2);
                let b = random::nh_element::<Rat, _>(&mut r, n, 1, 2);
                if matrix_iso(&(&a * &b))? != ext_mat_mul(&matrix_iso(&a)?, &matrix_iso(&b)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
    }
}

fn identity_items(max_n: usize, max_big_n: usize, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        out.push(item("identities", format!("n={} e^w from h^w", n), move || Ok(e_and_h_check(n))));
        out.push(item("identities", format!("n={} e in terms of h and e", n), move || {
            Ok((1..=n).all(|j| (0..=j).all(|k| eh_lemma_check(n, j, k))))
        }));
        out.push(item("identities", format!("n={} mixed determinant is Schur", n), move || {
            Ok(BinSeq::all(n).iter().all(|a| {
                let det = schur_det_mixed::<Rat>(a);
                let zeros = n - a.weight();
                let s = if zeros == 0 { Poly::one(n) } else { Polynomial::schur(n, &a.lambda_of(), 1, zeros) };
                det == s && det == schubert::<Rat>(&a.sigma())
            }))
        }));
        out.push(item("identities", format!("n={} wedge products of generators", n), move || {
            Ok(BinSeq::all(n).iter().all(wedge_alpha_check))
        }));
        for big_n in (n - 1).max(1)..=max_big_n {
            out.push(item("identities", format!("n={} N={} complete-function identity", n, big_n), move || {
                for i in 1..=n {
                    if !sym_ident_check(n, big_n, i)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }));
        }
    }
}

fn solomon_items(max_n: usize, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        out.push(item("solomon", format!("n={} H Q = Id, E Q~ = Id", n), move || Ok(hq_inverse_check(n))));
        if n > 3 {
            continue;
        }
        for (label, tuple) in [("h", h_tuple::<Rat>(n)), ("e", e_tuple::<Rat>(n))] {
            out.push(item("solomon", format!("n={} {} tuple: equivariance, coordinates, triple", n, label), move || {
                let f = symmetric_generators::<Rat>(n, FDegrees::Shifted);
                let j = JMap::new(&tuple, &f)?;
                let gens = exnil::extsym::exterior_gen(&tuple)?;
                for m in 0..1u32 << n {
                    let v = exnil::extsym::wedge_monomial(&gens, m).mul_poly(&f[0]);
                    if !j.coordinates_check(&v, &tuple)? {
                        return Ok(false);
                    }
                }
                let theta: Vec<DiffForm<Rat>> = (1..=n).map(|i| j.image(i).clone()).collect();
                let dfs: Vec<DiffForm<Rat>> = f.iter().map(exterior_derivative).collect();
                let t = lemma_triple_check(j.matrix(), &theta, &dfs)?;
                Ok(j.equivariance_check() && t.a && t.b && t.c && t.implications_hold)
            }));
        }
    }
}

fn ideal_items(max_n: usize, max_big_n: usize, seed: u64, out: &mut Vec<Item>) {
    for n in 1..=max_n {
        for big_n in 1..=max_big_n {
            out.push(item("ideal", format!("n={} N={} deformed ideal identities, y<=2", n, big_n), move || {
                let mut r = rng(seed, 300 + (10 * n + big_n) as u64);
                let ks: Vec<Rat> = (0..big_n).map(|_| random::rational(&mut r, 4)).collect();
                Ok(deformed_ideal_check(n, &RootMultiset::from_kappas(ks)?, 2)?.all())
            }));
        }
    }
}

pub fn run(suite: &str, max_n: usize, max_big_n: usize, seed: u64) -> anyhow::Result<Output> {
    let selected: Vec<&(&str, usize, usize)> = if suite == "all" {
        SUITES.iter().collect()
    } else {
        let s = SUITES
            .iter()
            .find(|s| s.0 == suite)
            .ok_or_else(|| AlgebraError::Malformed(format!("unknown suite {:?}; known: all, {}", suite, names())))?;
        vec![s]
    };
    for &&(name, cap_n, cap_big_n) in &selected {
        if max_n > cap_n {
            return Err(AlgebraError::CapExceeded { what: format!("--max-n for suite {}", name), value: max_n, cap: cap_n }.into());
        }
        if max_big_n > cap_big_n {
            return Err(
                AlgebraError::CapExceeded { what: format!("--max-N for suite {}", name), value: max_big_n, cap: cap_big_n }.into(),
            );
        }
    }
    let mut items = Vec::new();
    for &&(name, _, _) in &selected {
        match name {
            "schubert" => schubert_items(max_n, &mut items),
            "relations" => relation_items(max_n, &mut items),
            "bases" => basis_items(max_n, seed, &mut items),
            "membership" => membership_items(max_n, seed, &mut items),
            "restrict" => restrict_items(max_n, max_big_n, &mut items),
            "cohomology" => cohomology_items(max_n, max_big_n, &mut items),
            "deformed" => deformed_items(max_n, max_big_n, &mut items),
            "idempotents" => idempotent_items(max_n, seed, &mut items),
            "identities" => identity_items(max_n, max_big_n, &mut items),
            "solomon" => solomon_items(max_n, &mut items),
            "ideal" => ideal_items(max_n, max_big_n, seed, &mut items),
            _ => unreachable!("listed suite"),
        }
    }
    let results: Vec<Result<bool, String>> =
        items.par_iter().map(|it| (it.check)().map_err(|e| format!("{:#}", e))).collect();
    let width = items.iter().map(|i| i.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut passed = 0;
    for (it, res) in items.iter().zip(&results) {
        let status = match res {
            Ok(true) => "pass".to_string(),
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("ERROR {}", e),
        };
        if matches!(res, Ok(true)) {
            passed += 1;
        }
        writeln!(text, "{:<12} {:<width$}  {}", it.suite, it.name, status, width = width)?;
        rows.push(json!({"suite": it.suite, "item": it.name, "pass": matches!(res, Ok(true)), "error": res.as_ref().err()}));
    }
    writeln!(text, "{}/{} passed", passed, items.len())?;
    let ok = passed == items.len();
    Ok(Output { text, json: json!({"passed": passed, "total": items.len(), "items": Value::Array(rows)}), ok })
}

fn names() -> String {
    SUITES.iter().map(|s| s.0).collect::<Vec<_>>().join(", ")
}
