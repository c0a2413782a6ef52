//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use alon_tarsi::atnum::{
    at_number_exact, at_upper_bound_degeneracy, chromatic_number, halin_at_number,
    verify_no_at_orientation,
};
use alon_tarsi::eulerian::{
    has_odd_directed_cycle, poly_coefficient_oracle_with, tally_eulerian, tally_eulerian_exhaustive,
    EulerianTally,
};
use alon_tarsi::graph::{Digraph, Graph, Orientation};
use alon_tarsi::halin::{
    build_halin, enumerate_halin, fan_of, special_inner_vertices, split_at_fan, wheel, Fan,
    HalinGraph, PlaneTree,
};
use alon_tarsi::orient::{
    acyclic_from_ordering, combine, construct_at_orientation, degeneracy_ordering,
    orient_fan_acyclic, orient_fan_odd, orient_layered_stripping, orient_remainder_paths,
    AtCertificate, Construction, Part,
};
use alon_tarsi::Limits;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn corpus(max: usize) -> Vec<HalinGraph> {
    enumerate_halin(max).expect("corpus").collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::new(n, pairs).unwrap()
}

fn random_orientation(rng: &mut ChaCha8Rng, g: &Graph) -> Orientation {
    let arcs: Vec<_> = g
        .edges()
        .iter()
        .map(|&(a, b)| if rng.gen() { (a, b) } else { (b, a) })
        .collect();
    Orientation::new(g.clone(), Digraph::new(g.vertex_count(), arcs).unwrap()).unwrap()
}

fn arc_set(d: &Digraph) -> BTreeSet<(usize, usize)> {
    d.arcs().iter().copied().collect()
}

/// Root with `star` leaves on one inner child, `hub_leaves` direct leaves, and
/// `other` leaves on a second inner child.
fn two_stars_on_a_hub(hub_leaves: usize, star: usize, other: usize) -> HalinGraph {
    let mut children = vec![Vec::new(); 3 + hub_leaves + star + other];
    let a: Vec<usize> = (3..3 + star).collect();
    let mid: Vec<usize> = (3 + star..3 + star + hub_leaves).collect();
    let b: Vec<usize> = (3 + star + hub_leaves..3 + star + hub_leaves + other).collect();
    children[0] = std::iter::once(1).chain(mid).chain(std::iter::once(2)).collect();
    children[1] = a;
    children[2] = b;
    build_halin(&PlaneTree::new(0, children).unwrap()).unwrap()
}

fn first_fan(h: &HalinGraph) -> Fan {
    let mut fans: Vec<Fan> = special_inner_vertices(h)
        .unwrap()
        .into_iter()
        .map(|u| fan_of(h, u).unwrap())
        .collect();
    fans.sort_by_key(|f| f.rim()[0]);
    fans.remove(0)
}

fn criterion_1() -> Outcome {
    let graphs = corpus(10);
    let mut even_wheels = Vec::new();
    for h in &graphs {
        let exact = ok(at_number_exact(h.graph()))?;
        let closed = halin_at_number(h);
        ensure!(
            exact.value == closed,
            "order {} outer {}: exact {} vs closed form {closed}",
            h.order(),
            h.outer_len(),
            exact.value
        );
        ok(exact.witness.verify_for(h.graph(), &Limits::default()))?;
        let expected = if h.is_wheel() && h.order() % 2 == 0 { 4 } else { 3 };
        ensure!(exact.value == expected, "order {} has AT {}", h.order(), exact.value);
        if exact.value == 4 {
            even_wheels.push(h.outer_len());
        }
    }
    ensure!(even_wheels == [3, 5, 7, 9], "value 4 on outer lengths {even_wheels:?}");
    for outer in 3..=9 {
        ensure!(
            graphs.iter().any(|h| h.is_wheel() && h.outer_len() == outer),
            "wheel({outer}) missing from corpus"
        );
    }
    Ok(format!("{} graphs, AT = 4 exactly on wheels 3, 5, 7, 9", graphs.len()))
}

fn criterion_2() -> Outcome {
    let w = wheel(5).unwrap();
    let chi = ok(chromatic_number(w.graph()))?;
    ensure!(chi == 4, "chromatic number {chi}");
    ensure!(ok(verify_no_at_orientation(w.graph(), 2))?, "found an AT orientation with outdegree 2");
    Ok("chi(wheel(5)) = 4; no AT orientation with max outdegree 2".into())
}

fn check_even_outer(h: &HalinGraph) -> Result<(), String> {
    let cert = ok(construct_at_orientation(h))?;
    let d = cert.orientation().digraph();
    ensure!(cert.max_outdeg() <= 2, "max outdeg {}", cert.max_outdeg());
    ensure!(!ok(has_odd_directed_cycle(d))?, "odd directed cycle");
    ensure!(ok(tally_eulerian(d))?.diff() >= 1, "diff < 1");
    Ok(())
}

fn criterion_3() -> Outcome {
    for outer in [4, 6, 8] {
        check_even_outer(&wheel(outer).unwrap()).map_err(|e| format!("wheel({outer}): {e}"))?;
    }
    let non_wheels: Vec<_> = corpus(12)
        .into_iter()
        .filter(|h| !h.is_wheel() && h.outer_len() % 2 == 0)
        .collect();
    ensure!(non_wheels.len() >= 20, "only {} even-outer non-wheels", non_wheels.len());
    for h in &non_wheels {
        check_even_outer(h).map_err(|e| format!("order {}: {e}", h.order()))?;
    }
    Ok(format!("3 wheels and {} non-wheels with even outer cycle", non_wheels.len()))
}

fn criterion_4() -> Outcome {
    for k in (1..=13).step_by(2) {
        let cert = ok(orient_fan_odd(&Fan::standard(k).unwrap()))?;
        let want = EulerianTally::new((k as u64).div_ceil(2), (k as u64 - 1) / 2);
        ensure!(cert.tally() == want, "k = {k}: tally {:?}", cert.tally());
        ensure!(cert.tally().diff() == 1, "k = {k}: diff {}", cert.tally().diff());
    }
    Ok("k = 1..13 odd: ((k+1)/2, (k-1)/2, 1)".into())
}

fn criterion_5() -> Outcome {
    let limits = Limits::default();
    let mut notes = Vec::new();
    for (hub_leaves, k, odd) in [(3, 3, true), (3, 4, false)] {
        let h = two_stars_on_a_hub(hub_leaves, k, k);
        let n = h.outer_len();
        let fan = first_fan(&h);
        ensure!(fan.k() == k, "fan has k = {}", fan.k());
        let split = ok(split_at_fan(&h, &fan))?;
        let (u, v) = (fan.hub(), split.anchor);
        let f = &split.frame;
        let named = [(u, v), (f[0], f[n - 1]), (f[k - 1], f[k])];
        ensure!(split.crossing == named, "crossing {:?}", split.crossing);
        let fan_part = Part {
            vertices: split.fan.vertices.clone(),
            orientation: if odd {
                ok(orient_fan_odd(&fan))?.orientation().clone()
            } else {
                orient_fan_acyclic(&fan)
            },
        };
        let rest = if odd {
            ok(orient_layered_stripping(&split.rest.graph, &f[k..]))?.orientation
        } else {
            ok(orient_remainder_paths(&split.rest.graph, &f[k..]))?
        };
        let rest_part = Part {
            vertices: split.rest.vertices.clone(),
            orientation: rest,
        };
        let assembled = if odd {
            ok(combine(&fan_part, &rest_part, &named))?
        } else {
            let reversed: Vec<_> = named.iter().map(|&(a, b)| (b, a)).collect();
            ok(combine(&rest_part, &fan_part, &reversed))?
        };
        let d = assembled.digraph();
        for &(a, b) in &named {
            let arc = if odd { (a, b) } else { (b, a) };
            ensure!(d.arcs().contains(&arc), "crossing arc {arc:?} absent");
        }
        ensure!(d.is_orientation_of(h.graph()), "assembly does not orient the graph");
        let tag = if odd {
            Construction::OddFanSplit { leftover_edge: false }
        } else {
            Construction::EvenFanSplit
        };
        let cert = ok(AtCertificate::certify(assembled.clone(), tag, &limits))?;
        ensure!(cert.max_outdeg() == 2, "max outdeg {}", cert.max_outdeg());
        ensure!(cert.tally().diff() != 0, "diff 0");
        let built = ok(construct_at_orientation(&h))?;
        ensure!(
            arc_set(built.orientation().digraph()) == arc_set(d),
            "construct_at_orientation disagrees with the manual assembly"
        );
        notes.push(format!("n={n} k={k} diff={}", cert.tally().diff()));
    }
    Ok(notes.join("; "))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut both, mut not_both) = (0, 0);
    for trial in 0..300 {
        let sizes = [rng.gen_range(2..=5usize), rng.gen_range(2..=5usize)];
        let offset = [0, sizes[0]];
        let n = sizes[0] + sizes[1];
        let mut parts = Vec::new();
        for side in 0..2 {
            let max_edges = (sizes[side] * (sizes[side] - 1) / 2).min(7);
            let m = rng.gen_range(1..=max_edges);
            let g = random_graph(&mut rng, sizes[side], m);
            let o = random_orientation(&mut rng, &g);
            let arcs: Vec<_> = o.arcs().iter().map(|&(a, b)| (a + offset[side], b + offset[side])).collect();
            parts.push(Digraph::new(n, arcs).unwrap());
        }
        let mut pairs: Vec<(usize, usize)> = (0..sizes[0])
            .flat_map(|a| (sizes[0]..n).map(move |b| (a, b)))
            .collect();
        pairs.shuffle(&mut rng);
        pairs.truncate(rng.gen_range(1..=4));
        let forward = rng.gen::<bool>();
        let crossing: Vec<_> = pairs.iter().map(|&(a, b)| if forward { (a, b) } else { (b, a) }).collect();
        let whole = Digraph::new(
            n,
            parts[0].arcs().iter().chain(parts[1].arcs()).chain(&crossing).copied(),
        )
        .unwrap();
        let t0 = ok(tally_eulerian_exhaustive(&parts[0], 30))?;
        let t1 = ok(tally_eulerian_exhaustive(&parts[1], 30))?;
        let tw = ok(tally_eulerian_exhaustive(&whole, 30))?;
        let parts_at = t0.is_alon_tarsi() && t1.is_alon_tarsi();
        ensure!(tw.is_alon_tarsi() == parts_at, "trial {trial}: whole {tw:?}, parts {t0:?} {t1:?}");
        ensure!(tw.diff() == t0.diff() * t1.diff(), "trial {trial}: diff not multiplicative");
        if parts_at {
            both += 1;
        } else {
            not_both += 1;
        }
    }
    ensure!(not_both > 0 && both > 0, "degenerate sample: {both} AT, {not_both} non-AT");
    Ok(format!("300 digraphs ({both} with both parts AT, {not_both} without), diff multiplicative"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..600 {
        let n = rng.gen_range(3..=8usize);
        let m = rng.gen_range(1..=(n * (n - 1) / 2).min(14));
        let g = random_graph(&mut rng, n, m);
        let o = random_orientation(&mut rng, &g);
        let oracle = ok(poly_coefficient_oracle_with(&o, 16))?;
        let tally = ok(tally_eulerian(o.digraph()))?;
        ensure!(oracle.abs() == tally.diff().abs(), "trial {trial}: oracle {oracle}, diff {}", tally.diff());
    }
    let mut certs: Vec<AtCertificate> = corpus(10)
        .iter()
        .map(|h| construct_at_orientation(h).unwrap())
        .collect();
    for outer in [4, 6, 8] {
        certs.push(construct_at_orientation(&wheel(outer).unwrap()).unwrap());
    }
    for k in 1..=9 {
        let f = Fan::standard(k).unwrap();
        if k % 2 == 1 {
            certs.push(orient_fan_odd(&f).unwrap());
        }
        let acyclic = orient_fan_acyclic(&f);
        certs.push(AtCertificate::certify(acyclic, Construction::Degeneracy, &Limits::default()).unwrap());
    }
    for (hub, k) in [(3, 3), (3, 4)] {
        certs.push(construct_at_orientation(&two_stars_on_a_hub(hub, k, k)).unwrap());
    }
    for c in &certs {
        let oracle = ok(poly_coefficient_oracle_with(c.orientation(), 30))?;
        ensure!(
            oracle.abs() == c.tally().diff().abs(),
            "{} construction: oracle {oracle}, diff {}",
            c.construction(),
            c.tally().diff()
        );
    }
    Ok(format!("600 random orientations and {} constructions", certs.len()))
}

fn criterion_8() -> Outcome {
    let graphs = corpus(12);
    for h in &graphs {
        let order = degeneracy_ordering(h.graph());
        ensure!(order.degeneracy == 3, "order {}: degeneracy {}", h.order(), order.degeneracy);
        let o = ok(acyclic_from_ordering(h.graph(), &order.order))?;
        let cert = ok(AtCertificate::certify(o, Construction::Degeneracy, &Limits::default()))?;
        ok(cert.verify_for(h.graph(), &Limits::default()))?;
        ensure!(cert.max_outdeg() <= 3 && cert.at_bound() <= 4, "bound {}", cert.at_bound());
    }
    Ok(format!("{} graphs up to 12 vertices", graphs.len()))
}

fn sandwich(g: &Graph) -> Result<(), String> {
    let chi = ok(chromatic_number(g))?;
    let at = ok(at_number_exact(g))?.value;
    let upper = at_upper_bound_degeneracy(g);
    ensure!(chi <= at && at <= upper, "chi {chi}, AT {at}, degeneracy+1 {upper}");
    Ok(())
}

fn criterion_9() -> Outcome {
    let graphs = corpus(10);
    for h in &graphs {
        sandwich(h.graph()).map_err(|e| format!("Halin order {}: {e}", h.order()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..100 {
        let n = rng.gen_range(1..=9usize);
        let m = rng.gen_range(0..=(n * (n - 1) / 2).min(16));
        sandwich(&random_graph(&mut rng, n, m)).map_err(|e| format!("random {trial}: {e}"))?;
    }
    Ok(format!("{} Halin graphs and 100 random graphs", graphs.len()))
}

fn cli(args: &[&str], stdin: &[u8]) -> (i32, Vec<u8>, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alon-tarsi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cli");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

fn cli_ok(args: &[&str], stdin: &[u8]) -> Result<Vec<u8>, String> {
    let (code, out, err) = cli(args, stdin);
    ensure!(code == 0, "{args:?} exited {code}: {}", String::from_utf8_lossy(&err));
    Ok(out)
}

fn criterion_10() -> Outcome {
    let mut pipelines = 0;
    let mut gens: Vec<Vec<String>> = (3..=9).map(|n| vec!["wheel".into(), "--outer".into(), n.to_string()]).collect();
    for seed in 0..6u64 {
        gens.push(vec!["random".into(), "--leaves".into(), "6".into(), "--seed".into(), seed.to_string()]);
    }
    for g in &gens {
        let mut args = vec!["gen"];
        args.extend(g.iter().map(String::as_str));
        let halin = cli_ok(&args, b"")?;
        ensure!(halin == cli_ok(&args, b"")?, "{args:?} not deterministic");
        let cert = cli_ok(&["at", "--construct"], &halin)?;
        ensure!(cert == cli_ok(&["at", "--construct"], &halin)?, "construct not deterministic");
        cli_ok(&["verify"], &cert)?;
        let exact = cli_ok(&["at", "--exact"], &halin)?;
        ensure!(exact == cli_ok(&["at", "--exact"], &halin)?, "exact not deterministic");
        cli_ok(&["verify"], &exact)?;
        let h: HalinGraph = ok(serde_json::from_slice(&halin))?;
        let reparsed: AtCertificate = ok(serde_json::from_slice(&cert))?;
        ensure!(serde_json::to_vec(&reparsed).unwrap() == cert.trim_ascii_end(), "certificate round trip");
        ensure!(reparsed.at_bound() == halin_at_number(&h), "construct bound {}", reparsed.at_bound());
        let value: serde_json::Value = ok(serde_json::from_slice(&exact))?;
        ensure!(value["value"] == halin_at_number(&h), "exact value {}", value["value"]);
        pipelines += 1;
    }

    let w8 = cli_ok(&["gen", "wheel", "--outer", "8"], b"")?;
    let cert = cli_ok(&["at", "--construct"], &w8)?;
    let mut json: serde_json::Value = ok(serde_json::from_slice(&cert))?;
    ensure!(json["max_outdeg"] == 2, "wheel(8) certificate max outdeg {}", json["max_outdeg"]);
    let parsed: AtCertificate = ok(serde_json::from_value(json.clone()))?;
    let degs = parsed.orientation().digraph().out_degrees();
    let arcs = json["arcs"].as_array_mut().unwrap();
    let flip = arcs
        .iter()
        .position(|a| degs[a[1].as_u64().unwrap() as usize] == parsed.max_outdeg())
        .unwrap();
    let arc = arcs[flip].as_array_mut().unwrap();
    arc.swap(0, 1);
    let tampered = serde_json::to_vec(&json).unwrap();
    let (code, _, err) = cli(&["verify"], &tampered);
    ensure!(code == 1, "tampered certificate exited {code}");
    let diag: serde_json::Value = ok(serde_json::from_slice(&err))?;
    ensure!(diag["error"] == "verification-failed", "diagnostic {diag}");

    let c1 = cli_ok(&["corpus", "--max-n", "9"], b"")?;
    ensure!(c1 == cli_ok(&["corpus", "--max-n", "9"], b"")?, "corpus not deterministic");
    let (code, _, _) = cli(&["gen", "wheel"], b"");
    ensure!(code == 2, "usage error exited {code}");
    Ok(format!("{pipelines} gen/at/verify pipelines; tampered certificate rejected"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("closed form on enumerated Halin graphs", criterion_1),
        ("wheel(5) lower bound", criterion_2),
        ("even outer cycle constructions", criterion_3),
        ("odd fan tallies", criterion_4),
        ("fan split assemblies", criterion_5),
        ("composition across one-way cuts", criterion_6),
        ("polynomial coefficient oracle", criterion_7),
        ("degeneracy of Halin graphs", criterion_8),
        ("chromatic / AT / degeneracy sandwich", criterion_9),
        ("CLI pipelines and determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status}: {name} ({detail}) [{}]", i + 1, fmt_time(elapsed));
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn fmt_time(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
