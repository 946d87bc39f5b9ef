//! Acceptance suite: machine checks of every equivalence and structural
//! guarantee the library is built around, at desk scale. Each test prints
//! one pass/fail line; run with `--nocapture` to see them.

use sunscan::chordal::{find_antihole_geq, find_elimination_ordering, EliminationKind};
use sunscan::corpus::{complete_sun, labeled_graphs, labeled_triangle_free_graphs, random_graph};
use sunscan::oracle::{brute_force_sun_check, has_clique, has_stable_set};
use sunscan::reduction::{build_f, build_h, stable_set_from_witness};
use sunscan::sun::{
    enumerate_suns, find_any_sun, find_k_sun, verify_sun_witness, EnumerationStatus,
    SearchBudget, SearchOutcome,
};
use sunscan::Graph;

const K: usize = 4;

fn sweep_budget() -> SearchBudget {
    SearchBudget::new(100_000_000)
}

/// The instance corpus shared by the f-gadget criteria: every labeled
/// triangle-free graph with n <= 6, then 200 seeded random triangle-free
/// graphs with n in {7, 8}.
fn f_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in 0..=6 {
        corpus.extend(labeled_triangle_free_graphs(n));
    }
    for j in 0..100u64 {
        // Edge targets cycle through 0..=n^2/4, the triangle-free maximum.
        corpus.push(sunscan::random_triangle_free(7, (j % 13) as usize, 1000 + j));
        corpus.push(sunscan::random_triangle_free(8, (j % 17) as usize, 2000 + j));
    }
    corpus
}

fn report(name: &str, ok: bool, details: &str) {
    println!("acceptance {name}: {} ({details})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance {name} failed: {details}");
}

/// The f-gadget contains a sun exactly when its triangle-free source has a
/// stable set of size k, with every search completing.
#[test]
fn stable_set_iff_sun_in_f_gadget() {
    let mut instances = 0usize;
    let mut with_sun = 0usize;
    let mut indeterminate = 0usize;
    let mut violations = 0usize;
    for g in f_corpus() {
        let f = build_f(&g, K).unwrap();
        let stable = has_stable_set(&g, K);
        match find_any_sun(f.product(), sweep_budget()) {
            SearchOutcome::Found(w) => {
                assert_eq!(verify_sun_witness(f.product(), &w), Ok(true));
                // The recovered stable set closes the loop.
                let s = stable_set_from_witness(&f, &w).unwrap();
                assert_eq!(s.len(), K);
                with_sun += 1;
                if !stable {
                    violations += 1;
                }
            }
            SearchOutcome::Absent => {
                if stable {
                    violations += 1;
                }
            }
            SearchOutcome::Indeterminate { .. } => indeterminate += 1,
        }
        instances += 1;
    }
    report(
        "stable-set <-> sun equivalence on f(G,k)",
        violations == 0 && indeterminate == 0,
        &format!(
            "{instances} instances, {with_sun} with suns, \
             {violations} violations, {indeterminate} indeterminate"
        ),
    );
}

/// Every sun of an f-gadget has order 2k with ears alternating between
/// substituted blocks and the stable set, k of each.
#[test]
fn f_gadget_suns_have_uniform_shape() {
    let mut taken = 0usize;
    let mut witnesses_checked = 0usize;
    let mut violations = 0usize;
    for g in f_corpus() {
        if taken == 25 {
            break;
        }
        if !has_stable_set(&g, K) {
            continue;
        }
        let f = build_f(&g, K).unwrap();
        let enumeration = enumerate_suns(f.product(), 1_000_000, sweep_budget());
        assert!(
            matches!(enumeration.status, EnumerationStatus::Complete),
            "enumeration did not complete"
        );
        assert!(!enumeration.witnesses.is_empty());
        for w in &enumeration.witnesses {
            if w.order() != 2 * K || f.check_sun_shape(w).is_err() {
                violations += 1;
            }
            witnesses_checked += 1;
        }
        taken += 1;
    }
    report(
        "forced shape of every f(G,k) sun",
        taken == 25 && violations == 0,
        &format!("{taken} instances, {witnesses_checked} witnesses, {violations} violations"),
    );
}

/// No f-gadget contains an antihole on 7 or more vertices.
#[test]
fn f_gadget_has_no_long_antihole() {
    let mut instances = 0usize;
    let mut violations = 0usize;
    for n in 0..=6 {
        for g in labeled_triangle_free_graphs(n) {
            let f = build_f(&g, K).unwrap();
            if let Some(cert) = find_antihole_geq(f.product(), 7) {
                assert!(cert.verify(f.product()));
                violations += 1;
            }
            instances += 1;
        }
    }
    report(
        "antihole-freeness of f(G,k)",
        violations == 0,
        &format!("{instances} instances, {violations} violations"),
    );
}

/// The h-gadget contains a 4-sun exactly when its source has a 4-clique.
#[test]
fn clique_iff_ksun_in_h_gadget() {
    let mut instances = 0usize;
    let mut violations = 0usize;
    let mut check = |g: &Graph| {
        let h = build_h(g);
        let clique = has_clique(g, K);
        let sun = match find_k_sun(h.product(), K, sweep_budget()).unwrap() {
            SearchOutcome::Found(w) => {
                assert_eq!(verify_sun_witness(h.product(), &w), Ok(true));
                true
            }
            SearchOutcome::Absent => false,
            SearchOutcome::Indeterminate { .. } => panic!("h-gadget search exhausted its budget"),
        };
        if clique != sun {
            violations += 1;
        }
        instances += 1;
    };
    for n in 0..=5 {
        for g in labeled_graphs(n) {
            check(&g);
        }
    }
    for seed in 0..500 {
        check(&random_graph(6, 4000 + seed));
        check(&random_graph(7, 5000 + seed));
    }
    report(
        "clique <-> k-sun equivalence on h(G)",
        violations == 0,
        &format!("{instances} instances, {violations} violations"),
    );
}

/// Strongly chordal, chordal-and-sun-free, and simple-elimination-orderable
/// coincide on every graph swept.
#[test]
fn strongly_chordal_three_way_equivalence() {
    let mut instances = 0usize;
    let mut violations = 0usize;
    let mut check = |g: &Graph| {
        let simple = find_elimination_ordering(g, EliminationKind::Simple);
        let simplicial = find_elimination_ordering(g, EliminationKind::Simplicial);
        if let Some(o) = &simple {
            assert!(o.verify(g));
        }
        if let Some(o) = &simplicial {
            assert!(o.verify(g));
        }
        let sun_free = find_any_sun(g, sweep_budget()).is_absent();
        let strongly = simple.is_some();
        if strongly != (simplicial.is_some() && sun_free) {
            violations += 1;
        }
        instances += 1;
    };
    for n in 0..=6 {
        for g in labeled_graphs(n) {
            check(&g);
        }
    }
    for seed in 0..500 {
        for n in [7, 8, 9] {
            check(&random_graph(n, 6000 + seed * 3 + n as u64));
        }
    }
    report(
        "three-way strongly chordal equivalence",
        violations == 0,
        &format!("{instances} instances, {violations} violations"),
    );
}

/// The production sun search agrees with subset-enumeration brute force.
#[test]
fn sun_search_agrees_with_brute_force() {
    let mut graphs = 0usize;
    let mut decisions = 0usize;
    let mut disagreements = 0usize;
    for seed in 0..1000u64 {
        let n = 6 + (seed % 5) as usize;
        let g = random_graph(n, 7000 + seed);
        for t in 3..=n / 2 {
            let fast = match find_k_sun(&g, t, SearchBudget::default()).unwrap() {
                SearchOutcome::Found(w) => {
                    assert_eq!(w.order(), t);
                    assert_eq!(verify_sun_witness(&g, &w), Ok(true));
                    true
                }
                SearchOutcome::Absent => false,
                SearchOutcome::Indeterminate { .. } => panic!("budget exhausted at n <= 10"),
            };
            if fast != brute_force_sun_check(&g, t) {
                disagreements += 1;
            }
            decisions += 1;
        }
        graphs += 1;
    }
    report(
        "sun search vs brute-force oracle",
        disagreements == 0,
        &format!("{graphs} graphs, {decisions} decisions, {disagreements} disagreements"),
    );
}

/// Exact values on the named fixtures.
#[test]
fn fixture_exact_values() {
    let mut ok = true;
    let mut notes = Vec::new();

    let s5 = complete_sun(5);
    let chordal = find_elimination_ordering(&s5, EliminationKind::Simplicial).is_some();
    let strongly = find_elimination_ordering(&s5, EliminationKind::Simple).is_some();
    let order = match find_any_sun(&s5, SearchBudget::default()) {
        SearchOutcome::Found(w) => w.order(),
        _ => 0,
    };
    ok &= chordal && !strongly && order == 5;
    notes.push(format!("5-sun: chordal={chordal} strongly={strongly} sun_order={order}"));

    let f = build_f(&Graph::path(3), K).unwrap();
    let fv = f.product().vertex_count();
    let fe = f.product().edge_count();
    let f_sunless = find_any_sun(f.product(), sweep_budget()).is_absent();
    ok &= fv == 24 && fe == 110 && f_sunless;
    notes.push(format!("f(P3,4): {fv} vertices, {fe} edges, sun-free={f_sunless}"));

    let h = build_h(&Graph::complete(4));
    let hv = h.product().vertex_count();
    let he = h.product().edge_count();
    let h_sun = matches!(
        find_k_sun(h.product(), 4, SearchBudget::default()).unwrap(),
        SearchOutcome::Found(_)
    );
    ok &= hv == 10 && he == 18 && h_sun;
    notes.push(format!("h(K4): {hv} vertices, {he} edges, has 4-sun={h_sun}"));

    report("fixture exact values", ok, &notes.join("; "));
}

/// The two structural observations about f-gadgets hold on every corpus
/// instance: no triangle spans three substituted blocks, and block vertices
/// sharing a central neighbor have identical central neighborhoods.
#[test]
fn f_gadget_block_triangle_and_central_neighborhood_properties() {
    let mut instances = 0usize;
    let mut violations = 0usize;
    for g in f_corpus() {
        let f = build_f(&g, K).unwrap();
        if f.check_block_triangles().is_err() {
            violations += 1;
        }
        if f.check_central_neighborhood_alignment().is_err() {
            violations += 1;
        }
        instances += 1;
    }
    report(
        "structural observations on f(G,k)",
        violations == 0,
        &format!("{instances} instances, {violations} violations"),
    );
}
