//! End-to-end acceptance checks for the affine `D5` configuration: the
//! defining relations, the conjugated γ/η/β subsystem triple, centralizer
//! and stabilizer searches, normalizer assembly, the quasi-translation
//! family, the four translation directions, and the rank-1/rank-3 worked
//! examples. Everything is exact; no tolerances appear anywhere.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use num_rational::Rational64;

use weylkit::{
    action_table, as_translation, assemble_normalizer, bilinear, close_subgroup,
    default_search_cap, evaluate_word, geb_system, orthogonal_subsystem, parse_word,
    quasi_translation_analysis, reflection_through, run_suite, simple_coroot, simple_reflection,
    stabilizer_search, translation_element, CartanData, CheckStatus, CoweightVec, GroupElement,
    RootVec, TypeLabel,
};

fn ambient(label: &str) -> Arc<CartanData> {
    let label: TypeLabel = label.parse().expect("valid label");
    Arc::new(CartanData::load_builtin(label).expect("builtin system"))
}

fn d5() -> Arc<CartanData> {
    ambient("D5~")
}

fn ev(word: &str, data: &Arc<CartanData>) -> GroupElement {
    let tokens = parse_word(word, data).expect("parseable word");
    evaluate_word(&tokens, data).expect("evaluable word")
}

fn root(coords: &[i64]) -> RootVec {
    RootVec::new(coords.to_vec())
}

fn halves(numerators: &[i64]) -> CoweightVec {
    CoweightVec::new(numerators.iter().map(|&n| Rational64::new(n, 2)).collect())
}

/// δ-shift of `g` on each simple root: `g(α_i) = α_i + k_i δ` must hold
/// exactly, and the `k_i` are returned.
fn delta_shifts(g: &GroupElement, data: &CartanData) -> Vec<i64> {
    let delta = data.null_root().expect("affine");
    let size = data.size();
    (0..size)
        .map(|i| {
            let alpha = RootVec::simple(i, size);
            let diff = g.act(&alpha).sub(&alpha);
            let k = diff.coords()[0] / delta.coords()[0];
            assert_eq!(diff, delta.scale(k), "image of a{i} is not a δ-shift");
            k
        })
        .collect()
}

// -------------------------------------------------------------------------
// 1. Defining relations, and δ-invariance over the whole length-12 ball.

#[test]
fn relations_and_null_root_invariance() {
    let data = d5();
    let n = data.size();
    let id = GroupElement::identity(&data);
    let gens: Vec<GroupElement> =
        (0..n).map(|i| simple_reflection(i, &data).unwrap()).collect();

    for (i, s) in gens.iter().enumerate() {
        assert_eq!(s.mul(s), id, "s{i}^2 != 1");
    }
    for i in 0..n {
        for j in (i + 1)..n {
            // Simply-laced: m_ij = 2 for A[i][j] = 0 and 3 for A[i][j] = -1.
            let m = if data.entry(i, j) == 0 { 2 } else { 3 };
            assert_eq!(gens[i].mul(&gens[j]).pow(m), id, "(s{i} s{j})^{m} != 1");
        }
    }

    // Breadth-first ball of radius 12 with matrix dedup; every element must
    // fix δ = (1,1,2,2,1,1) exactly.
    let delta = data.null_root().unwrap();
    let mut seen: HashSet<GroupElement> = HashSet::from([id]);
    let mut frontier: Vec<GroupElement> = vec![GroupElement::identity(&data)];
    for _ in 0..12 {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &gens {
                let h = g.mul(s);
                assert!(h.fixes(&delta), "word {:?} moves δ", h);
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    assert!(seen.len() > 10_000, "ball of radius 12 is implausibly small");
}

// -------------------------------------------------------------------------
// 2. The conjugator w = s1 s3 s2 carries eight listed roots onto the
//    orthogonal triple gamma/eta/beta.

#[test]
fn conjugated_triple_images_and_orthogonality() {
    let data = d5();
    let w = ev("s1 s3 s2", &data);

    let gamma0 = root(&[1, 1, 1, 1, 0, 0]);
    let gamma1 = root(&[0, 0, 1, 1, 1, 1]);
    let eta1 = root(&[0, 0, 1, 1, 0, 0]);
    let eta0 = root(&[1, 1, 1, 1, 1, 1]);
    let beta1 = root(&[0, 1, 1, 0, 0, 0]);
    let beta2 = root(&[0, 0, 0, 1, 1, 0]);
    let beta0 = root(&[0, 0, 0, 1, 0, 1]);
    let beta3 = root(&[1, 0, 1, 0, 0, 0]);

    let cases: [(&[i64; 6], &RootVec); 8] = [
        (&[1, 0, 0, 0, 0, 0], &gamma0),
        (&[0, 1, 2, 2, 1, 1], &gamma1),
        (&[0, 1, 0, 0, 0, 0], &eta1),
        (&[1, 0, 2, 2, 1, 1], &eta0),
        (&[0, 0, 0, 1, 0, 0], &beta1),
        (&[0, 0, 0, 0, 1, 0], &beta2),
        (&[0, 0, 0, 0, 0, 1], &beta0),
        (&[1, 1, 2, 1, 0, 0], &beta3),
    ];
    for (source, image) in cases {
        assert_eq!(&w.act(&root(source)), image);
    }

    let gamma = [&gamma0, &gamma1];
    let eta = [&eta1, &eta0];
    let beta = [&beta1, &beta2, &beta0, &beta3];
    let mut cross = 0;
    let blocks: [&[&RootVec]; 3] = [&gamma, &eta, &beta];
    for (bi, lhs) in blocks.iter().enumerate() {
        for rhs in blocks.iter().skip(bi + 1) {
            for u in *lhs {
                for v in *rhs {
                    assert_eq!(bilinear(u, v, &data), Rational64::from_integer(0));
                    cross += 1;
                }
            }
        }
    }
    assert_eq!(cross, 20);
}

// -------------------------------------------------------------------------
// 3. The orthogonal subsystem of {α0} is A1 × A3 with the expected simple
//    systems, and reflections through its roots fix α0.

#[test]
fn centralizer_of_alpha0() {
    let data = d5();
    let alpha0 = root(&[1, 0, 0, 0, 0, 0]);
    let components = orthogonal_subsystem(std::slice::from_ref(&alpha0), &data).unwrap();
    assert_eq!(components.len(), 2);

    let mut labels: Vec<String> = components.iter().map(|c| c.label.to_string()).collect();
    labels.sort();
    assert_eq!(labels, ["A1", "A3"]);

    for c in &components {
        let roots: HashSet<&RootVec> = c.roots.iter().collect();
        match c.label.to_string().as_str() {
            "A1" => {
                assert_eq!(roots, HashSet::from([&root(&[0, 1, 0, 0, 0, 0])]));
            }
            _ => {
                assert_eq!(
                    roots,
                    HashSet::from([
                        &root(&[0, 0, 0, 1, 0, 0]),
                        &root(&[0, 0, 0, 0, 1, 0]),
                        &root(&[0, 0, 0, 0, 0, 1]),
                    ])
                );
            }
        }
        for r in &c.roots {
            let s = reflection_through(r, &data).unwrap();
            assert!(s.fixes(&alpha0), "reflection through {r} moves a0");
        }
    }
}

// -------------------------------------------------------------------------
// 4. Exhaustive stabilizer search: the shortest reflection word exchanging
//    gamma0 and gamma1 has length 4 and the matrix of s0 s1 s4 s5; nothing
//    of length ≤ 3 exchanges them.

#[test]
fn minimal_gamma_exchange_is_s0145() {
    let data = d5();
    let start = Instant::now();
    let targets = [root(&[1, 1, 1, 1, 0, 0]), root(&[0, 0, 1, 1, 1, 1])];

    let hits = stabilizer_search(&targets, &[], 6, &data, default_search_cap()).unwrap();
    let swap = hits
        .iter()
        .find(|h| h.perm == [1, 0])
        .expect("an exchanging element exists within length 6");
    assert_eq!(swap.element.word_len(), Some(4));
    // Equality of matrices identifies the element up to reordering of
    // commuting letters.
    assert_eq!(swap.element, ev("s0 s1 s4 s5", &data));

    let short = stabilizer_search(&targets, &[], 3, &data, default_search_cap()).unwrap();
    assert!(
        short.iter().all(|h| h.perm != [1, 0]),
        "no element of length ≤ 3 may exchange the pair"
    );
    assert!(start.elapsed().as_secs() < 60, "search exceeded its time budget");
}

// -------------------------------------------------------------------------
// 5. The complement ⟨g', σ1σ2⟩ has exactly 8 elements and acts on the three
//    subsystems exactly as tabulated.

#[test]
fn complement_group_order_and_action_table() {
    let geb = geb_system().unwrap();
    let data = &geb.ambient;

    let g_prime = ev("s0 s1 s4 s5", data);
    let sigma = ev("sigma12", data);
    let group = close_subgroup(&[g_prime.clone(), sigma.clone()], data, 64).unwrap();
    assert_eq!(group.len(), 8);

    let rows = [
        ("sigma2 sigma1".to_string(), ev("sigma2 sigma1", data)),
        ("sigma1 sigma2".to_string(), ev("sigma1 sigma2", data)),
        ("rot2".to_string(), sigma.mul(&sigma)),
        ("gprime".to_string(), g_prime.clone()),
        ("gprime rot2".to_string(), g_prime.mul(&sigma).mul(&sigma)),
    ];
    let table = action_table(&rows, &[&geb.eta, &geb.gamma, &geb.beta], data);
    assert_eq!(table.columns, ["eta", "gamma", "beta"]);
    let expected = [
        ["-", "pi_gamma", "p2p1"],
        ["-", "pi_gamma", "p1p2"],
        ["-", "-", "p1p2p1p2"],
        ["pi_eta", "pi_gamma", "p1p2p1p2"],
        ["pi_eta", "pi_gamma", "-"],
    ];
    for (row, cells) in table.rows.iter().zip(expected) {
        assert_eq!(row.cells, cells, "action row {} differs", row.label);
    }
}

/// Matches assembled blocks against expected generator sets, by matrix
/// equality and ignoring block order.
fn assert_blocks_match(
    pres: &weylkit::NormalizerPresentation,
    expected: &[Vec<GroupElement>],
) {
    assert_eq!(pres.blocks.len(), expected.len());
    let mut used = vec![false; expected.len()];
    for block in &pres.blocks {
        let got: HashSet<&GroupElement> = block.generators.iter().map(|(_, g)| g).collect();
        let hit = expected.iter().enumerate().find(|(i, want)| {
            !used[*i] && got == want.iter().collect::<HashSet<_>>()
        });
        let (i, _) = hit.unwrap_or_else(|| {
            panic!("block {} matches no expected generator set", block.label)
        });
        used[i] = true;
    }
}

// -------------------------------------------------------------------------
// 6. Normalizer of the gamma pair: two commuting blocks with the recorded
//    generators, and the eta-weight quasi-translation squares to the same
//    vector along two independent routes.

#[test]
fn gamma_normalizer_blocks_and_eta_weight_square() {
    let geb = geb_system().unwrap();
    let data = &geb.ambient;
    let sigma = ev("sigma12", data);
    let refl = |name: &str| geb.reflection(name).expect("named reflection").clone();

    let pres =
        assemble_normalizer(&geb.gamma, &[sigma.clone()], 6, data, default_search_cap())
            .unwrap();
    let rot2 = sigma.mul(&sigma);
    assert_blocks_match(
        &pres,
        &[
            vec![refl("eta0"), refl("eta1"), ev("s0 s1 s4 s5", data).mul(&rot2)],
            vec![refl("beta0"), refl("beta1"), refl("beta2"), refl("beta3"), sigma.clone()],
        ],
    );
    let labels: Vec<String> =
        pres.centralizer_components.iter().map(|c| c.label.to_string()).collect();
    assert_eq!(labels, ["A3~", "A1~"]);
    assert!(pres.component_mixers.is_empty());

    // Quasi-translation along the eta fundamental weight: second power is
    // the translation by the eta coroot, computed two independent ways.
    let t = ev("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2", data);
    let report =
        quasi_translation_analysis(&t, &[&geb.gamma, &geb.eta, &geb.beta], 24);
    assert_eq!(report.translation_power, Some(2));
    let gamma_map = report.subsystem_actions[0].map.as_ref().unwrap();
    assert_eq!(gamma_map.perm, [1, 0], "t must transpose gamma0 and gamma1");

    let square = as_translation(&t.pow(2)).expect("t^2 is a translation");
    // Route 1: coordinates of -h1+h2+h3-h4-h5.
    assert_eq!(square, halves(&[-2, 2, 2, -2, -2, 0]));
    // Route 2: the coroot of eta1 = a2 + a3 via the coroot recipe.
    let eta_coroot = simple_coroot(2, data).unwrap().add(&simple_coroot(3, data).unwrap());
    assert_eq!(square, eta_coroot);
    assert_eq!(report.vector, Some(eta_coroot));
}

// -------------------------------------------------------------------------
// 7. The six images of the simple roots under the eta-weight
//    quasi-translation, with the sign-corrected a3 image.

#[test]
fn eta_weight_images_of_simple_roots() {
    let data = d5();
    let t = ev("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2", &data);

    // a2 ↦ -(a3 + a4 + a5) and the other five displayed images.
    let expected: [[i64; 6]; 6] = [
        [1, 0, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1],
        [0, 0, 0, -1, -1, -1],
        // The recorded list shows a1 + a2 + a3 here; the computed image is
        // its negative (a documented discrepancy in the verification suite).
        [-1, -1, -1, 0, 0, 0],
        [1, 1, 1, 1, 1, 0],
        [1, 1, 1, 1, 0, 1],
    ];
    for (i, coords) in expected.iter().enumerate() {
        assert_eq!(t.act(&RootVec::simple(i, 6)), root(coords), "image of a{i}");
    }

    let report = run_suite("order2").unwrap();
    let flagged = report
        .cases
        .iter()
        .find(|c| c.id == "order2/eta-quasi/image-a3-recorded")
        .expect("the a3 image divergence is documented");
    assert_eq!(flagged.status, CheckStatus::Discrepancy);
}

// -------------------------------------------------------------------------
// 8. Normalizer of the beta system, and the two order-4 quasi-translations
//    with their induced 4-cycles and translating fourth powers.

#[test]
fn beta_normalizer_blocks_and_order_four_quasi_translations() {
    let geb = geb_system().unwrap();
    let data = &geb.ambient;
    let sigma = ev("sigma12", data);
    let refl = |name: &str| geb.reflection(name).expect("named reflection").clone();

    let pres =
        assemble_normalizer(&geb.beta, &[sigma.clone()], 6, data, default_search_cap())
            .unwrap();
    assert_blocks_match(
        &pres,
        &[
            vec![refl("eta0"), refl("eta1"), ev("s0 s1 s4 s5", data).mul(&sigma)],
            vec![refl("gamma0"), refl("gamma1"), sigma.clone()],
        ],
    );
    let labels: Vec<String> =
        pres.centralizer_components.iter().map(|c| c.label.to_string()).collect();
    assert_eq!(labels, ["A1~", "A1~"]);

    let te = ev("s0 s1 s4 s5 sigma12 s2 s3 s2", data);
    let tg = ev("sigma12 s2 s5 s3 s4 s3 s5 s2", data);
    for (t, beta_perm, fourth) in [
        (&te, vec![3, 0, 1, 2], halves(&[-4, 4, 4, -4, -4, 0])),
        (&tg, vec![1, 2, 3, 0], halves(&[-4, 4, -4, 4, 4, 0])),
    ] {
        let report = quasi_translation_analysis(t, &[&geb.beta], 24);
        assert_eq!(report.translation_power, Some(4));
        let map = report.subsystem_actions[0].map.as_ref().unwrap();
        assert_eq!(map.perm, beta_perm);
        assert_eq!(as_translation(&t.pow(4)), Some(fourth));
    }
}

// -------------------------------------------------------------------------
// 9. The four translation directions: exact vectors, exact δ-shift actions
//    on the simple roots, and the either-or resolution of the T2 weight.

#[test]
fn translation_directions_are_exact() {
    let data = d5();
    let t1 = ev(
        "s2 s5 s3 s4 s3 s5 s2 sigma2 sigma1 s2 s3 s2 sigma2 sigma1 s0 s1 s4 s5",
        &data,
    );
    let half = "s3 s5 s3 s1 s2 s1 s3 s4 s3 sigma2 sigma1";
    let t2 = ev(&format!("{half} {half}"), &data);
    let t3 = ev(
        "s2 s5 s3 s4 s3 s5 s2 s1 s2 s1 s3 s4 s3 s0 s2 s0 sigma2 sigma1",
        &data,
    );
    let t4 = ev(
        "sigma12 s0 s2 s0 s3 s4 s3 s1 s2 s1 sigma12 s1 s2 s1 s3 s5 s3 s0 s2 s0",
        &data,
    );

    let h = |i: usize| CoweightVec::fundamental(i, 6);
    let cases: [(&GroupElement, CoweightVec, [i64; 6]); 3] = [
        (&t1, h(1).sub(&h(2)), [-1, -1, 1, 0, 0, 0]),
        (&t3, h(3).sub(&h(2)).sub(&h(4)), [-1, 0, 1, -1, 1, 0]),
        (&t4, h(2).sub(&h(3)), [0, 0, -1, 1, 0, 0]),
    ];
    for (t, vector, shifts) in cases {
        assert_eq!(as_translation(t), Some(vector.clone()));
        assert_eq!(delta_shifts(t, &data), shifts);
        assert_eq!(*t, translation_element(&vector, &data).unwrap());
    }

    // T2 translates and acts as recorded; its vector matches exactly one of
    // the two displayed weight forms (they differ by the 4↔5 symmetry).
    let v2 = as_translation(&t2).expect("T2 is a translation");
    assert_eq!(delta_shifts(&t2, &data), [-1, 1, -1, 1, -1, 1]);
    let form_a = halves(&[-2, 2, -2, 2, -2, 0]);
    let form_b = halves(&[-2, 2, -2, -2, 2, 0]);
    assert!(form_a != form_b);
    assert_eq!(v2, form_a, "the composed word yields -h1+h2-h3+h4-h5");
    assert_ne!(v2, form_b);

    let report = run_suite("directions").unwrap();
    let flagged = report
        .cases
        .iter()
        .find(|c| c.id == "directions/T2/recorded-weight")
        .expect("the weight divergence is documented");
    assert_eq!(flagged.status, CheckStatus::Discrepancy);
}

// -------------------------------------------------------------------------
// 10. The rank-1 and rank-3 worked examples.

#[test]
fn rank_one_example() {
    let data = ambient("A1~");
    let t = ev("pi s1", &data);
    assert_eq!(t.matrix().to_rows(), [[2, -1], [1, 0]]);

    let delta = data.null_root().unwrap();
    let a1 = RootVec::simple(1, 2);
    let a0 = RootVec::simple(0, 2);
    assert_eq!(t.act(&a1), a1.sub(&delta));
    assert_eq!(t.act(&a0), a0.add(&delta));

    let h1 = CoweightVec::fundamental(1, 2);
    assert_eq!(as_translation(&t), Some(h1.clone()));
    assert_eq!(t, translation_element(&h1, &data).unwrap());
    // The simple coroot is twice the fundamental weight here.
    assert_eq!(simple_coroot(1, &data).unwrap(), h1.scale(Rational64::from_integer(2)));
}

#[test]
fn rank_three_example() {
    let data = ambient("A3~");
    let id = GroupElement::identity(&data);
    let rho = ev("p1p2", &data);
    assert_eq!(ev("p1 p2", &data), rho);
    assert_eq!(rho.pow(4), id);
    assert!(rho.pow(2) != id);

    let t1 = ev("p1p2 s3 s2 s1", &data);
    let h = |i: usize| CoweightVec::fundamental(i, 4);
    let vectors = [h(1), h(2).sub(&h(1)), h(3).sub(&h(2)), h(3).neg()];

    // The remaining three are conjugates by the rotation.
    let mut ts = vec![t1.clone()];
    for _ in 0..3 {
        ts.push(rho.mul(ts.last().unwrap()).mul(&rho.inverse()));
    }
    for (t, v) in ts.iter().zip(&vectors) {
        assert_eq!(as_translation(t), Some(v.clone()));
        assert_eq!(*t, translation_element(v, &data).unwrap());
    }
    assert_eq!(ts[1], ev("p1p2 s0 s3 s2", &data));
    assert_eq!(ts[2], ev("p1p2 s1 s0 s3", &data));
    assert_eq!(ts[3], ev("p1p2 s2 s1 s0", &data));

    let product = ts.iter().fold(id.clone(), |acc, t| acc.mul(t));
    assert_eq!(product, id, "t1 t2 t3 t4 must be the identity");

    // The rotation carries h1 to h2 - h1 under the contragredient action.
    assert_eq!(rho.act_coweight(&h(1)).unwrap(), h(2).sub(&h(1)));
}

// -------------------------------------------------------------------------
// 11. The full verification report runs clean: no failures, and exactly the
//     documented set of discrepancies.

#[test]
fn full_report_has_no_failures() {
    let report = run_suite("all").unwrap();
    assert!(report.exit_ok());
    assert_eq!(report.summary.failed, 0);
    let flagged: Vec<&str> = report
        .cases
        .iter()
        .filter(|c| c.status == CheckStatus::Discrepancy)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(
        flagged,
        [
            "normalizer/beta/setwise-stabilizer-scope",
            "order2/eta-quasi/image-a3-recorded",
            "order2/beta-quasi/tb2-recorded-word",
            "directions/T1/recorded-variant",
            "directions/T2/recorded-weight",
            "directions/T2/eta-action",
            "directions/T2/recorded-variant",
            "directions/T3/recorded-variant",
            "directions/T4/recorded-factored-variant",
            "examples/a3/t2-recorded-word",
        ]
    );
}
