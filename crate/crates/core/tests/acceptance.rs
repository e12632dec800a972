//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sudoku_rect::bipartite::{
    degree_matching, edge_color, BipartiteGraph, DegreeDemand, MatchOutcome,
};
use sudoku_rect::completion::{complete, complete_seeded, decide_guaranteed, CompletionOutcome};
use sudoku_rect::constructions::{construct_counterexample, figure1_fixture, ConstructionCase};
use sudoku_rect::counting::{count_completions, sudoku_bounds, CountCaps};
use sudoku_rect::{Order, SudokuGrid};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, format!("took {spent:?}, limit {limit:?}"))
}

fn non_guaranteed(k: usize) -> Vec<usize> {
    (0..=k * k)
        .filter(|&m| !decide_guaranteed(k, m).unwrap().is_guaranteed())
        .collect()
}

fn random_square(k: usize, seed: u64) -> SudokuGrid {
    match complete_seeded(&SudokuGrid::new(Order::new(k).unwrap()), seed).unwrap() {
        CompletionOutcome::Completed(sq) => sq,
        other => panic!("empty grid did not complete: {other:?}"),
    }
}

fn figure1_regression() -> Check {
    let start = Instant::now();
    let g = figure1_fixture();
    ensure(g.validate().is_valid(), "fixture does not validate")?;
    let CompletionOutcome::NotCompletable(obs) = complete(&g).map_err(|e| e.to_string())? else {
        return Err("fixture completed".into());
    };
    ensure(obs.replay(&g), "obstruction does not replay")?;
    let count = count_completions(&g, CountCaps::default());
    ensure(count.exhausted && count.count.is_zero(), format!("count {:?}", count))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("NotCompletable at block {}, count 0 in {:?}", obs.block, start.elapsed()))
}

fn order_nine_characterization() -> Check {
    let failing = non_guaranteed(3);
    ensure(failing == [5], format!("not-guaranteed set {failing:?}"))?;
    Ok("not guaranteed exactly for m = 5".into())
}

fn order_sixteen_characterization() -> Check {
    let start = Instant::now();
    let failing = non_guaranteed(4);
    ensure(failing == [7, 9, 10, 11], format!("not-guaranteed set {failing:?}"))?;
    for &m in &failing {
        let rep = construct_counterexample(4, m).map_err(|e| format!("m={m}: {e}"))?;
        ensure(rep.rectangle.validate().is_valid(), format!("m={m} invalid"))?;
        ensure(
            !complete(&rep.rectangle).map_err(|e| e.to_string())?.is_completed(),
            format!("m={m} completed"),
        )?;
    }
    let mut tried = 0;
    for m in (0..=16).filter(|m| !failing.contains(m)) {
        for i in 0..50 {
            let sq = random_square(4, 1000 * m as u64 + i);
            let rect = sq.truncate_rows(m).unwrap();
            let out = complete(&rect).map_err(|e| e.to_string())?;
            ensure(out.is_completed(), format!("m={m} sample {i} did not complete"))?;
            tried += 1;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{{7, 9, 10, 11}} rejected; {tried} other rectangles completed"))
}

fn counterexample_sweep() -> Check {
    let start = Instant::now();
    let mut built = 0;
    let mut cases = [0usize; 3];
    for k in 3..=6 {
        for m in non_guaranteed(k) {
            let rep = construct_counterexample(k, m).map_err(|e| format!("k={k} m={m}: {e}"))?;
            ensure(rep.rectangle.validate().is_valid(), format!("k={k} m={m} invalid"))?;
            ensure(
                rep.rectangle.rect_shape().map(|s| s.m) == Some(m),
                format!("k={k} m={m} wrong shape"),
            )?;
            match complete(&rep.rectangle).map_err(|e| e.to_string())? {
                CompletionOutcome::NotCompletable(obs) if obs.replay(&rep.rectangle) => {}
                _ => return Err(format!("k={k} m={m} not rejected with a replayable witness")),
            }
            cases[match rep.case {
                ConstructionCase::A => 0,
                ConstructionCase::B => 1,
                ConstructionCase::C => 2,
            }] += 1;
            built += 1;
        }
    }
    ensure(cases.iter().all(|&c| c > 0), format!("case usage {cases:?}"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{built} rectangles (a: {}, b: {}, c: {}) in {:?}",
        cases[0],
        cases[1],
        cases[2],
        start.elapsed()
    ))
}

/// All order-4 squares, enumerated row by row over permutations without
/// using the library.
fn brute_force_order4() -> Vec<[[usize; 4]; 4]> {
    fn perms(prefix: &mut Vec<usize>, out: &mut Vec<[usize; 4]>) {
        if prefix.len() == 4 {
            out.push([prefix[0], prefix[1], prefix[2], prefix[3]]);
            return;
        }
        for v in 1..=4 {
            if !prefix.contains(&v) {
                prefix.push(v);
                perms(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut rows = Vec::new();
    perms(&mut Vec::new(), &mut rows);
    let ok = |g: &[[usize; 4]]| {
        let r = g.len();
        (0..4).all(|c| (0..r).all(|i| (0..i).all(|j| g[i][c] != g[j][c])))
            && (0..r).all(|i| {
                (0..i).filter(|&j| j / 2 == i / 2).all(|j| {
                    (0..4).all(|c| (0..4).filter(|&d| d / 2 == c / 2).all(|d| g[i][c] != g[j][d]))
                })
            })
    };
    let mut out = Vec::new();
    let mut stack: Vec<[usize; 4]> = Vec::new();
    fn extend(
        stack: &mut Vec<[usize; 4]>,
        rows: &[[usize; 4]],
        ok: &dyn Fn(&[[usize; 4]]) -> bool,
        out: &mut Vec<[[usize; 4]; 4]>,
    ) {
        if stack.len() == 4 {
            out.push([stack[0], stack[1], stack[2], stack[3]]);
            return;
        }
        for row in rows {
            stack.push(*row);
            if ok(stack) {
                extend(stack, rows, ok, out);
            }
            stack.pop();
        }
    }
    extend(&mut stack, &rows, &ok, &mut out);
    out
}

fn exhaustive_order_four() -> Check {
    let start = Instant::now();
    let oracle = brute_force_order4();
    let order = Order::new(2).unwrap();
    let res = count_completions(&SudokuGrid::new(order), CountCaps::default());
    ensure(res.exhausted && res.count == BigUint::from(288u32), format!("count {}", res.count))?;
    ensure(oracle.len() == 288, format!("oracle found {}", oracle.len()))?;
    let mut checked = 0;
    for sq in &oracle {
        let full = SudokuGrid::from_filled_rows(order, sq).unwrap();
        for m in 0..=4 {
            let rect = full.truncate_rows(m).unwrap();
            let completes = complete(&rect).map_err(|e| e.to_string())?.is_completed();
            let oracle_count = oracle.iter().filter(|o| o[..m] == sq[..m]).count();
            ensure(
                completes == (oracle_count > 0),
                format!("m={m}: complete={completes}, oracle count {oracle_count}"),
            )?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("Sud(4) = 288 by search and oracle; {checked} truncations agree"))
}

fn round_trip() -> Check {
    let start = Instant::now();
    let mut runs = 0;
    for k in [2, 3] {
        let n = k * k;
        for seed in 0..100 {
            let sq = random_square(k, seed);
            for m in 0..=n {
                let rect = sq.truncate_rows(m).unwrap();
                let CompletionOutcome::Completed(out) = complete(&rect).map_err(|e| e.to_string())? else {
                    return Err(format!("k={k} seed={seed} m={m} rejected"));
                };
                ensure(
                    out.is_full() && out.validate().is_valid() && out.extends(&rect),
                    format!("k={k} seed={seed} m={m} bad completion"),
                )?;
                runs += 1;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{runs} truncations completed"))
}

fn order_four_sandwich() -> Check {
    let b = sudoku_bounds(2).map_err(|e| e.to_string())?;
    let (lower, upper) = (b.log_lower.exp(), b.log_upper.exp());
    ensure((lower - 0.1001).abs() < 5e-5, format!("lower {lower}"))?;
    ensure((upper - 576.0).abs() < 1e-9, format!("upper {upper}"))?;
    ensure(lower <= 288.0 && 288.0 <= upper, "288 outside the bounds")?;
    let gap = (b.log_lower - b.log_closed_form_lower).abs();
    ensure(gap <= 1e-6, format!("closed form differs by {gap}"))?;
    Ok(format!("{lower:.4} <= 288 <= {upper}"))
}

fn asymptotic_ratios() -> Check {
    let r10 = sudoku_bounds(10).map_err(|e| e.to_string())?;
    let r100 = sudoku_bounds(100).map_err(|e| e.to_string())?;
    let r1000 = sudoku_bounds(1000).map_err(|e| e.to_string())?;
    let summary = format!(
        "k=100: lower {:.4}, upper {:.4}; k=10: {:.4}/{:.4}; k=1000: {:.4}/{:.4}",
        r100.ratio_lower, r100.ratio_upper, r10.ratio_lower, r10.ratio_upper, r1000.ratio_lower, r1000.ratio_upper
    );
    let band = 0.95..=1.05;
    ensure(
        band.contains(&r100.ratio_lower) && band.contains(&r100.ratio_upper),
        format!("ratio outside [0.95, 1.05] at k=100 ({summary})"),
    )?;
    ensure(
        (r1000.ratio_lower - 1.0).abs() < (r10.ratio_lower - 1.0).abs()
            && (r1000.ratio_upper - 1.0).abs() < (r10.ratio_upper - 1.0).abs(),
        format!("no improvement from k=10 to k=1000 ({summary})"),
    )?;
    Ok(summary)
}

fn random_graph(rng: &mut ChaCha8Rng, max_side: usize, max_edges: usize) -> BipartiteGraph {
    let l = rng.gen_range(1..=max_side);
    let r = rng.gen_range(1..=max_side);
    let e = rng.gen_range(0..=max_edges);
    let mut g = BipartiteGraph::new(l, r);
    for _ in 0..e {
        g.add_edge(rng.gen_range(0..l), rng.gen_range(0..r));
    }
    g
}

/// Random quotas with equal sums on both sides.
fn random_demand(rng: &mut ChaCha8Rng, g: &BipartiteGraph) -> DegreeDemand {
    let total = rng.gen_range(0..=g.edges().len().max(1));
    let spread = |count: usize, rng: &mut ChaCha8Rng| {
        let mut q = vec![0; count];
        for _ in 0..total {
            q[rng.gen_range(0..count)] += 1;
        }
        q
    };
    let left = spread(g.left_count(), rng);
    let right = spread(g.right_count(), rng);
    DegreeDemand::new(left, right)
}

fn exhaustive_feasible(g: &BipartiteGraph, d: &DegreeDemand) -> bool {
    let e = g.edges();
    (0u32..1 << e.len()).any(|mask| {
        let mut dl = vec![0; g.left_count()];
        let mut dr = vec![0; g.right_count()];
        for (i, &(a, b)) in e.iter().enumerate() {
            if mask >> i & 1 == 1 {
                dl[a] += 1;
                dr[b] += 1;
            }
        }
        dl == d.left && dr == d.right
    })
}

fn kernel_properties() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut matched, mut infeasible) = (0, 0);
    for case in 0..10_000 {
        let g = random_graph(&mut rng, 5, 12);
        let d = random_demand(&mut rng, &g);
        let brute = exhaustive_feasible(&g, &d);
        match degree_matching(&g, &d).map_err(|e| e.to_string())? {
            MatchOutcome::Matched(mm) => {
                let mut dl = vec![0; g.left_count()];
                let mut dr = vec![0; g.right_count()];
                for &i in &mm.edges {
                    let (a, b) = g.edges()[i];
                    dl[a] += 1;
                    dr[b] += 1;
                }
                ensure(brute && dl == d.left && dr == d.right, format!("case {case}: bad matching"))?;
                matched += 1;
            }
            MatchOutcome::Infeasible(cert) => {
                ensure(!brute, format!("case {case}: feasible instance rejected"))?;
                ensure(cert.replay(&g, &d), format!("case {case}: certificate does not replay"))?;
                // Independent recount of the deficiency.
                let s = &cert.violating_set;
                let required: usize = s.iter().map(|&v| d.left[v]).sum();
                let mut mult = vec![0; g.right_count()];
                for &(a, b) in g.edges() {
                    if s.contains(&a) {
                        mult[b] += 1;
                    }
                }
                let available: usize = (0..g.right_count()).map(|y| mult[y].min(d.right[y])).sum();
                ensure(available < required, format!("case {case}: no real deficiency"))?;
                infeasible += 1;
            }
        }
    }
    for case in 0..1_000 {
        let g = random_graph(&mut rng, 8, 40);
        let c = edge_color(&g);
        let delta = g.max_degree();
        ensure(c.is_proper(&g), format!("coloring {case} not proper"))?;
        ensure(c.colors.iter().all(|&x| x < delta.max(1)), format!("coloring {case} uses more than {delta} colors"))?;
        // Independent properness check.
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            for (j, &(a2, b2)) in g.edges().iter().enumerate().take(i) {
                if (a == a2 || b == b2) && c.colors[i] == c.colors[j] {
                    return Err(format!("coloring {case}: edges {j}, {i} clash"));
                }
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{matched} matched, {infeasible} certified infeasible, 1000 colorings proper"))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("figure 1 regression", figure1_regression),
        ("k=3 characterization", order_nine_characterization),
        ("k=4 characterization", order_sixteen_characterization),
        ("counterexample sweep k=3..6", counterexample_sweep),
        ("exhaustive oracle at k=2", exhaustive_order_four),
        ("round-trip completion k=2,3", round_trip),
        ("bounds sandwich at k=2", order_four_sandwich),
        ("asymptotic ratios", asymptotic_ratios),
        ("kernel properties", kernel_properties),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
