//! Acceptance suite: one test per release criterion, each printing a
//! `[PASS]` line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every check is exact; there are no tolerances anywhere in the engine.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use leavitt_core::algebra::{Element, GeneratorKind};
use leavitt_core::fixtures;
use leavitt_core::graph::Graph;
use leavitt_core::ideals::{
    all_saturated_hereditary, is_basically_simple, quotient_graph, simplicity_report, IdealHandle,
};
use leavitt_core::oracle::{
    acyclic_family, base_change, cycle_family, differential_suite, laurent_principal_member,
    EFamily, LaurentPoly,
};
use leavitt_core::ring::{RingDescriptor, RingElement, RingHom};
use leavitt_core::sample;
use leavitt_core::witness::{full_witness, zero_part_decompose, zero_part_reduce};

const Z: RingDescriptor = RingDescriptor::Integers;
const Q: RingDescriptor = RingDescriptor::Rationals;

fn z6() -> RingDescriptor {
    RingDescriptor::integers_mod(6).unwrap()
}

fn arc(name: &str) -> Arc<Graph> {
    Arc::new(fixtures::graph(name))
}

fn vertex(g: &Arc<Graph>, ring: RingDescriptor, name: &str) -> Element {
    Element::generator(g, ring, GeneratorKind::Vertex, name).unwrap()
}

/// Representations available for a fixture: the cycle model, the acyclic
/// model, or neither.
fn available_families(g: &Arc<Graph>, ring: RingDescriptor) -> Vec<EFamily> {
    let mut fams = Vec::new();
    if let Ok(f) = cycle_family(g, ring) {
        fams.push(f);
    }
    if let Ok(f) = acyclic_family(g, ring) {
        fams.push(f);
    }
    fams
}

#[test]
fn criterion_01_two_vertex_example() {
    let e2 = arc("E2");
    let sets = all_saturated_hereditary(&e2);
    assert_eq!(
        sets.len(),
        4,
        "E2 has exactly four saturated hereditary subsets"
    );
    let rendered: Vec<String> = sets.iter().map(|s| s.display()).collect();
    assert_eq!(rendered, vec!["{}", "{u}", "{w}", "{u, w}"]);

    // the acyclic representation realizes the direct sum Z + Z
    let fam = acyclic_family(&e2, Z).unwrap();
    assert!(fam.verify().unwrap());
    let u = vertex(&e2, Z, "u");
    let w = vertex(&e2, Z, "w");
    let ru = fam.apply(&u).unwrap();
    let rw = fam.apply(&w).unwrap();
    assert_eq!(ru.size(), 2);
    for (rep, on, off) in [(&ru, 0, 1), (&rw, 1, 0)] {
        assert!(rep.entry(on, on).coefficient(0).is_one());
        assert!(rep.entry(off, off).is_zero());
        assert!(rep.entry(0, 1).is_zero() && rep.entry(1, 0).is_zero());
    }

    // vertex memberships of the four ideal handles
    let expected_memberships: [&[&str]; 4] = [&[], &["u"], &["w"], &["u", "w"]];
    for (set, expected) in sets.into_iter().zip(expected_memberships) {
        let handle = IdealHandle::new(set).unwrap();
        for name in ["u", "w"] {
            let member = handle.contains_element(&vertex(&e2, Z, name)).unwrap();
            assert_eq!(member, expected.contains(&name));
        }
    }
    println!("[PASS] criterion 1: E2 ideal lattice and Z + Z realization");
}

#[test]
fn criterion_02_cycle_oracle() {
    for name in ["C1", "C3"] {
        for ring in [Z, z6()] {
            let g = arc(name);
            let report = differential_suite(&g, ring, 2, 500).unwrap();
            assert!(report.family_verified, "{name}/{ring}: family relations");
            assert_eq!(report.additive_failures, 0, "{name}/{ring}");
            assert_eq!(report.multiplicative_failures, 0, "{name}/{ring}");
            assert_eq!(report.faithfulness_failures, 0, "{name}/{ring}");
        }
    }
    println!("[PASS] criterion 2: Laurent-matrix oracle agrees on C1 and C3 over Z and Z_6");
}

#[test]
fn criterion_03_cuntz_krieger_witnesses() {
    for name in ["R2", "GL", "A2"] {
        for ring in [Z, z6()] {
            let g = arc(name);
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for round in 0..200 {
                let x = sample::nonzero_element(&mut rng, &g, ring, 4, 3);
                let witness =
                    full_witness(&x).unwrap_or_else(|e| panic!("{name}/{ring} round {round}: {e}"));
                assert!(!witness.coefficient.is_zero());
                assert!(witness.verify(&x).unwrap(), "{name}/{ring} round {round}");
            }
        }
    }
    println!(
        "[PASS] criterion 3: 200 Cuntz-Krieger witnesses re-verify on R2, GL, A2 over Z and Z_6"
    );
}

#[test]
fn criterion_04_graded_witnesses() {
    for name in fixtures::NAMES {
        let g = arc(name);
        for ring in [Z, z6()] {
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            for round in 0..200 {
                let Some(x) = sample::homogeneous_element(&mut rng, &g, ring, 0, 3) else {
                    panic!("degree-zero elements always exist");
                };
                let red = zero_part_reduce(&x)
                    .unwrap_or_else(|e| panic!("{name}/{ring} round {round}: {e}"));
                assert!(!red.coefficient.is_zero());
                assert!(red.verify(&x).unwrap(), "{name}/{ring} round {round}");
            }

            // nonzero degrees exist only when the graph has edges
            let feasible: Vec<i64> = [-2i64, -1, 1, 2]
                .into_iter()
                .filter(|d| !g.paths_of_length(d.unsigned_abs() as usize).is_empty())
                .collect();
            if feasible.is_empty() {
                continue;
            }
            for round in 0..200 {
                let degree = feasible[round % feasible.len()];
                let Some(x) = sample::homogeneous_element(&mut rng, &g, ring, degree, 3) else {
                    continue;
                };
                let parts = zero_part_decompose(&x).unwrap();
                assert!(!parts.is_empty(), "{name}/{ring} round {round}");
                let mut rebuilt = Element::zero(&g, ring);
                for (alpha, component) in &parts {
                    assert_eq!(component.homogeneous_degree(), Some(0));
                    let piece = if degree > 0 {
                        Element::real_path(&g, ring, alpha.clone())
                            .mul(component)
                            .unwrap()
                    } else {
                        component
                            .mul(&Element::ghost_path(&g, ring, alpha.clone()))
                            .unwrap()
                    };
                    rebuilt = rebuilt.add(&piece).unwrap();
                }
                assert_eq!(rebuilt, x, "{name}/{ring} round {round} degree {degree}");
            }
        }
    }
    println!("[PASS] criterion 4: degree-zero reductions and nonzero-degree decompositions verify on all fixtures");
}

#[test]
fn criterion_05_condition_k_quotient_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for round in 0..1000 {
        let g = Arc::new(sample::graph(&mut rng, 4, 5));
        let k_holds = g.check_condition_k().0;
        let quotients_l = all_saturated_hereditary(&g)
            .into_iter()
            .all(|h| quotient_graph(&g, &h).unwrap().check_condition_l().0);
        assert_eq!(
            k_holds,
            quotients_l,
            "round {round}: graph\n{}",
            g.to_text()
        );
    }
    println!("[PASS] criterion 5: Condition (K) matches Condition (L) of all quotients on 1000 random graphs");
}

#[test]
fn criterion_06_simplicity_equivalences() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for round in 0..1000 {
        let g = Arc::new(sample::graph(&mut rng, 4, 5));
        let report = simplicity_report(&g);
        assert!(
            report.all_agree(),
            "round {round}: {report:?}\n{}",
            g.to_text()
        );
        assert_eq!(
            is_basically_simple(&g),
            report.l_and_only_trivial,
            "round {round}"
        );
    }
    println!(
        "[PASS] criterion 6: all four simplicity characterizations agree on 1000 random graphs"
    );
}

#[test]
fn criterion_07_ideal_quotient_coherence() {
    let six = z6();
    for name in fixtures::NAMES {
        let g = arc(name);
        for set in all_saturated_hereditary(&g) {
            let handle = IdealHandle::new(set).unwrap();

            // quotient_map is a ring homomorphism on 300 random pairs
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..300 {
                let x = sample::element(&mut rng, &g, Z, 3, 2);
                let y = sample::element(&mut rng, &g, Z, 3, 2);
                let px = handle.quotient_map(&x).unwrap();
                let py = handle.quotient_map(&y).unwrap();
                assert_eq!(
                    handle.quotient_map(&x.add(&y).unwrap()).unwrap(),
                    px.add(&py).unwrap()
                );
                assert_eq!(
                    handle.quotient_map(&x.mul(&y).unwrap()).unwrap(),
                    px.mul(&py).unwrap()
                );
            }

            // vertex membership is exactly H
            for v in g.vertex_ids() {
                let vn = g.vertex_name(v);
                let member = handle.contains_element(&vertex(&g, Z, vn)).unwrap();
                assert_eq!(member, handle.set().contains(v), "{name}: vertex {vn}");
            }

            // basicness over Z_6: r v lies in I_H iff v does, r = 1..5
            for v in g.vertex_ids() {
                let vn = g.vertex_name(v);
                let v6 = vertex(&g, six, vn);
                let expected = handle.set().contains(v);
                for r in 1..=5i64 {
                    let rv = v6.scale(&RingElement::from_i64(six, r)).unwrap();
                    assert_eq!(
                        handle.contains_element(&rv).unwrap(),
                        expected,
                        "{name}: {r} {vn}"
                    );
                }
            }

            // selfadjointness on random members and non-members
            for round in 0..100 {
                let x = if round % 2 == 0 {
                    sample::element(&mut rng, &g, Z, 3, 2)
                } else {
                    // a guaranteed member: junctions inside H
                    match sample_member(&mut rng, &g, handle.set()) {
                        Some(m) => m,
                        None => sample::element(&mut rng, &g, Z, 3, 2),
                    }
                };
                assert_eq!(
                    handle.contains_element(&x).unwrap(),
                    handle.contains_element(&x.star()).unwrap(),
                    "{name}: selfadjointness"
                );
            }
        }
    }
    println!("[PASS] criterion 7: quotient maps are homomorphisms; membership, basicness and selfadjointness hold");
}

/// A random element of `I_H`: a combination of monomials whose junction
/// lies inside `H` (the span description of the ideal).
fn sample_member(
    rng: &mut ChaCha8Rng,
    g: &Arc<Graph>,
    h: &leavitt_core::ideals::HereditarySet,
) -> Option<Element> {
    use rand::seq::SliceRandom;
    let inside: Vec<_> = h.vertices().iter().copied().collect();
    let w = *inside.choose(rng)?;
    let mut raw = Vec::new();
    for _ in 0..2 {
        let alpha = sample::path_into(rng, g, w, 2);
        let beta = sample::path_into(rng, g, w, 2);
        raw.push((alpha, beta, sample::nonzero_ring_element(rng, Z)));
    }
    Element::from_raw(g, Z, raw).ok()
}

#[test]
fn criterion_08_characteristic() {
    let six = z6();
    for name in fixtures::NAMES {
        let g = arc(name);
        let families = available_families(&g, six);
        for v in g.vertex_ids() {
            let vn = g.vertex_name(v);
            let v6 = vertex(&g, six, vn);
            let killed = v6.scale(&RingElement::from_i64(six, 6)).unwrap();
            assert!(killed.is_zero(), "{name}: 6 {vn} = 0");
            for fam in &families {
                assert!(fam.apply(&killed).unwrap().is_zero());
            }
            for k in 1..=5i64 {
                let kv = v6.scale(&RingElement::from_i64(six, k)).unwrap();
                assert!(!kv.is_zero(), "{name}: {k} {vn} != 0");
                for fam in &families {
                    assert!(
                        !fam.apply(&kv).unwrap().is_zero(),
                        "{name}: representation of {k} {vn}"
                    );
                }
            }
        }
    }
    println!("[PASS] criterion 8: characteristic of the algebra over Z_6 is 6, in normal form and in every representation");
}

#[test]
fn criterion_09_base_change() {
    let six = z6();
    for name in fixtures::NAMES {
        let g = arc(name);
        for target in [six, Q] {
            let hom = RingHom::new(Z, target).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            for _ in 0..300 {
                let x = sample::element(&mut rng, &g, Z, 3, 2);
                let y = sample::element(&mut rng, &g, Z, 3, 2);
                let bx = base_change(&hom, &x).unwrap();
                let by = base_change(&hom, &y).unwrap();
                assert_eq!(
                    base_change(&hom, &x.add(&y).unwrap()).unwrap(),
                    bx.add(&by).unwrap()
                );
                assert_eq!(
                    base_change(&hom, &x.mul(&y).unwrap()).unwrap(),
                    bx.mul(&by).unwrap()
                );
                assert_eq!(base_change(&hom, &x.star()).unwrap(), bx.star());

                // the image is literally coefficientwise reduction
                for (m, c) in x.terms() {
                    assert_eq!(bx.coefficient(m), hom.apply(c).unwrap());
                }
                for (m, _) in bx.terms() {
                    assert!(!x.coefficient(m).is_zero());
                }
            }
        }
    }
    println!("[PASS] criterion 9: base change Z -> Z_6 and Z -> Q preserves +, *, star and reduces coefficientwise");
}

#[test]
fn criterion_10_nongraded_basic_ideal_demo() {
    let one_plus_x = LaurentPoly::one(Q)
        .add(&LaurentPoly::monomial(1, Q.one()))
        .unwrap();
    let one = LaurentPoly::one(Q);
    assert!(!laurent_principal_member(&one, &one_plus_x).unwrap());

    // x^-1 (1 + x) = x^-1 + 1 lies in the ideal, but its degree-zero
    // graded component 1 does not, so the ideal is not graded
    let shifted = LaurentPoly::monomial(-1, Q.one()).add(&one).unwrap();
    assert!(laurent_principal_member(&shifted, &one_plus_x).unwrap());
    println!("[PASS] criterion 10: <1+x> in Q[x,x^-1] is basic but not graded");
}

#[test]
fn criterion_11_algebra_laws() {
    for name in fixtures::NAMES {
        let g = arc(name);
        for ring in [Z, z6()] {
            let mut rng = ChaCha8Rng::seed_from_u64(11);

            // associativity
            for _ in 0..500 {
                let x = sample::element(&mut rng, &g, ring, 3, 2);
                let y = sample::element(&mut rng, &g, ring, 3, 2);
                let z = sample::element(&mut rng, &g, ring, 3, 2);
                assert_eq!(
                    x.mul(&y).unwrap().mul(&z).unwrap(),
                    x.mul(&y.mul(&z).unwrap()).unwrap(),
                    "{name}/{ring}: associativity"
                );
            }

            // grading additivity on homogeneous pairs
            for round in 0..200 {
                let dj = [-1i64, 0, 1][round % 3];
                let dk = [0i64, 1, -1][round % 3];
                let (Some(x), Some(y)) = (
                    sample::homogeneous_element(&mut rng, &g, ring, dj, 3),
                    sample::homogeneous_element(&mut rng, &g, ring, dk, 3),
                ) else {
                    continue;
                };
                let product = x.mul(&y).unwrap();
                for (m, _) in product.terms() {
                    assert_eq!(m.degree(), dj + dk, "{name}/{ring}: grading");
                }
            }

            // involution laws
            for _ in 0..500 {
                let x = sample::element(&mut rng, &g, ring, 3, 2);
                let y = sample::element(&mut rng, &g, ring, 3, 2);
                assert_eq!(x.star().star(), x, "{name}/{ring}: involutive");
                assert_eq!(
                    x.mul(&y).unwrap().star(),
                    y.star().mul(&x.star()).unwrap(),
                    "{name}/{ring}: antimultiplicative"
                );
            }

            // CK2 normalizes to zero at every regular vertex
            for v in g.vertex_ids() {
                if g.out_edges(v).is_empty() {
                    continue;
                }
                let mut acc =
                    Element::generator(&g, ring, GeneratorKind::Vertex, g.vertex_name(v)).unwrap();
                for &e in g.out_edges(v) {
                    let en = g.edge_name(e).to_string();
                    let real = Element::generator(&g, ring, GeneratorKind::Edge, &en).unwrap();
                    let ghost =
                        Element::generator(&g, ring, GeneratorKind::GhostEdge, &en).unwrap();
                    acc = acc.sub(&real.mul(&ghost).unwrap()).unwrap();
                }
                assert!(acc.is_zero(), "{name}/{ring}: CK2 at {}", g.vertex_name(v));
            }

            // linear independence of up to six distinct paths
            let paths = g.enumerate_paths(3);
            for round in 0..100 {
                use rand::seq::SliceRandom;
                use rand::Rng;
                let count = rng.gen_range(1..=6.min(paths.len()));
                let mut chosen = paths.clone();
                chosen.shuffle(&mut rng);
                chosen.truncate(count);
                chosen.dedup();
                let raw: Vec<_> = chosen
                    .iter()
                    .map(|p| {
                        (
                            p.clone(),
                            leavitt_core::graph::Path::vertex(p.range(&g)),
                            sample::nonzero_ring_element(&mut rng, ring),
                        )
                    })
                    .collect();
                let combo = Element::from_raw(&g, ring, raw).unwrap();
                assert!(
                    !combo.is_zero(),
                    "{name}/{ring} round {round}: dependent paths"
                );
                assert_eq!(combo.term_count(), chosen.len());
            }
        }
    }
    println!(
        "[PASS] criterion 11: associativity, grading, involution, CK2 and path independence hold"
    );
}
