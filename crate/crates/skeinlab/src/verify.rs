//! The verification battery: each check recomputes a published value from
//! scratch and reports pass, fail, or a budget skip.

use std::fmt::Write;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skeinlab_core::bounds::{ledger_check, ledger_transcript, DegreeBound, LedgerVariant};
use skeinlab_core::constructors::*;
use skeinlab_core::homfly::{homfly_naive, homfly_with_budget, morton_bound, z_degree, EXTENDED_BUDGET};
use skeinlab_core::{Diagram, Error, LaurentPoly2, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedBudget => "SKIPPED-BUDGET",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub title: &'static str,
    /// The statement being checked.
    pub claim: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub budget: u64,
    /// Also run the large examples, with at least the extended budget.
    pub extended: bool,
}

enum Outcome {
    Fail(String),
    Budget(String),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(s) => Outcome::Budget(s.to_string()),
            e => Outcome::Fail(e.to_string()),
        }
    }
}

type Step<T = ()> = Result<T, Outcome>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Step {
    if ok { Ok(()) } else { Err(Outcome::Fail(msg())) }
}

/// Computes polynomials and counts the Morton checks along the way.
struct Engine {
    budget: u64,
    morton_checks: usize,
}

impl Engine {
    fn homfly(&mut self, d: &Diagram, budget: u64) -> Step<(LaurentPoly2, i32, i64)> {
        let (p, _) = homfly_with_budget(d, budget)?;
        let m = z_degree(&p)?;
        let bound = morton_bound(d)?;
        assert!(m as i64 <= bound, "Morton's inequality fails: z-degree {m} exceeds {bound}");
        self.morton_checks += 1;
        Ok((p, m, bound))
    }

    fn degree(&mut self, d: &Diagram) -> Step<i32> {
        let budget = self.budget;
        self.homfly(d, budget).map(|(_, m, _)| m)
    }
}

fn run(id: &str, title: &'static str, claim: &'static str, body: impl FnOnce() -> Step<String>) -> Check {
    let (status, detail) = match body() {
        Ok(d) => (Status::Pass, d),
        Err(Outcome::Fail(m)) => (Status::Fail, m),
        Err(Outcome::Budget(m)) => (Status::SkippedBudget, m),
    };
    Check { id: id.to_string(), title, claim, status, detail }
}

fn t3() -> Diagram {
    torus2(3).expect("trefoil")
}

fn examples() -> Vec<(&'static str, Diagram)> {
    let mut v: Vec<(&'static str, Diagram)> = vec![
        ("T(2,3)", t3()),
        ("T(2,4)", torus2(4).unwrap()),
        ("T(2,5)", torus2(5).unwrap()),
        ("T(2,6)", torus2(6).unwrap()),
        ("P(2,1,1)", pretzel(&[2, 1, 1]).unwrap()),
        ("P(3,1,1)", pretzel(&[3, 1, 1]).unwrap()),
        ("P(3,3,-2)", pretzel(&[3, 3, -2]).unwrap()),
        ("4-plat (2,1,1)", four_plat(&[2, 1, 1]).unwrap()),
        ("4-plat (1,1,1,1,1)", four_plat(&[1, 1, 1, 1, 1]).unwrap()),
    ];
    v.push(("D(T(2,3), 0)", flat_double(&t3(), 0).unwrap()));
    v.push(("W(T(2,3), 0, +)", whitehead_double(&t3(), 0, Clasp::Positive).unwrap()));
    v
}

fn random_braid(rng: &mut StdRng) -> Diagram {
    let strands = rng.random_range(2..=4usize);
    let len = rng.random_range(1..=8usize);
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.random_range(1..strands as i32);
            if rng.random_bool(0.5) { g } else { -g }
        })
        .collect();
    braid_closure(strands, &word).expect("braid word in range")
}

fn property_checks(e: &mut Engine) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run("8a", "skein relation", "v^-1 P(L+) - v P(L-) = z P(L0)", || {
        let mut rng = StdRng::seed_from_u64(0x5ee1);
        let mut tested = 0;
        while tested < 200 {
            let d = random_braid(&mut rng);
            if d.crossing_count() == 0 {
                continue;
            }
            let i = rng.random_range(0..d.crossing_count());
            let b = e.budget;
            let (plus, _, _) = e.homfly(&d.with_sign(i, Sign::Positive)?, b)?;
            let (minus, _, _) = e.homfly(&d.with_sign(i, Sign::Negative)?, b)?;
            let (zero, _, _) = e.homfly(&d.smooth(i)?, b)?;
            ensure(plus.shifted(-1, 0) - minus.shifted(1, 0) == zero.shifted(0, 1), || {
                format!("relation fails at crossing {i} of a {}-crossing diagram", d.crossing_count())
            })?;
            tested += 1;
        }
        Ok(format!("{tested} random closed braids"))
    }));
    out.push(run("8b", "mirror invariance", "M(mirror K) = M(K)", || {
        let ex = examples();
        for (name, d) in &ex {
            let (a, b) = (e.degree(d)?, e.degree(&d.mirror())?);
            ensure(a == b, || format!("{name}: {a} vs {b}"))?;
        }
        Ok(format!("{} diagrams", ex.len()))
    }));
    out.push(run("8c", "face count", "f = c + 2 on connected diagrams", || {
        let mut n = 0;
        for (name, d) in examples() {
            let f = d.faces()?.count();
            ensure(f == d.crossing_count() + 2, || format!("{name}: {f} faces, {} crossings", d.crossing_count()))?;
            n += 1;
        }
        Ok(format!("{n} diagrams"))
    }));
    out.push(run("8d", "crossing counts", "c(P(k)) = sum |k_i|, c(D) = 4c + 2|n|, c(W) = 4c + 2|n| + 2", || {
        for n in 2..=9 {
            ensure(torus2(n)?.crossing_count() == n, || format!("T(2,{n})"))?;
        }
        for k in [&[3i32, 1, 1][..], &[2, 3], &[3, 3, -2], &[-2, 5, 1, 1]] {
            let want: usize = k.iter().map(|a| a.unsigned_abs() as usize).sum();
            ensure(pretzel(k)?.crossing_count() == want, || format!("P{k:?}"))?;
        }
        for w in [&[1, 1, 1][..], &[2, 1, 1], &[3, 2, 4, 1, 1]] {
            ensure(four_plat(w)?.crossing_count() == w.iter().sum::<u32>() as usize, || format!("4-plat {w:?}"))?;
        }
        for (name, k) in examples().into_iter().filter(|(_, d)| d.component_count() == 1) {
            let c = k.crossing_count();
            for n in -2..=2i32 {
                let t = 2 * n.unsigned_abs() as usize;
                ensure(flat_double(&k, n)?.crossing_count() == 4 * c + t, || format!("D({name}, {n})"))?;
                let w = whitehead_double(&k, n, Clasp::Negative)?;
                ensure(w.crossing_count() == 4 * c + t + 2, || format!("W({name}, {n}, -)"))?;
            }
        }
        Ok("torus, pretzel, 4-plat and doubles".into())
    }));
    out.push(run("8e", "twist replacement", "twist_replace keeps T(2,n) reduced and alternating", || {
        let mut n_moves = 0;
        for n in 2..=6 {
            let d = torus2(n)?;
            for i in 0..n {
                for axis in [TwistAxis::Parallel, TwistAxis::Antiparallel] {
                    let t = twist_replace(&d, i, axis)?;
                    ensure(t.is_alternating(), || format!("T(2,{n}) crossing {i} {axis:?}: not alternating"))?;
                    ensure(t.nugatory_crossings().is_empty(), || format!("T(2,{n}) crossing {i} {axis:?}: nugatory"))?;
                    n_moves += 1;
                }
            }
        }
        Ok(format!("{n_moves} moves"))
    }));
    out.push(run("8f", "deflation", "4-plats deflate to the trefoil and replay back", || {
        let words: [&[u32]; 4] = [&[1, 1, 1], &[3, 1, 1], &[2, 1, 1], &[1, 1, 1, 1, 1]];
        let mut steps = Vec::new();
        for w in words {
            let path = deflation_path(w)?;
            ensure(isomorphism(path.end(), &four_plat(&[1, 1, 1])?).is_some(), || format!("{w:?} ends elsewhere"))?;
            let back = replay(&path)?;
            ensure(isomorphism(&back, &four_plat(w)?).is_some(), || format!("{w:?} does not replay"))?;
            steps.push(path.steps.len().to_string());
        }
        Ok(format!("steps {}", steps.join(", ")))
    }));
    out.push(run("8g", "clasp site", "M(W(T(2,3))) does not depend on the clasp site", || {
        let mut ms = Vec::new();
        for site in 1..=3 {
            let mut o = DoubleOptions::whitehead(0, Clasp::Positive);
            o.site = Some(site);
            ms.push(e.degree(&double(&t3(), &o)?)?);
        }
        ensure(ms.iter().all(|&m| m == ms[0]), || format!("degrees {ms:?}"))?;
        Ok(format!("sites 1-3 all give {}", ms[0]))
    }));
    let checks = e.morton_checks;
    out.push(run("8h", "Morton inequality", "M(L) <= c(D) - s(D) + 1", || Ok(format!("asserted on {checks} diagrams"))));
    out
}

fn roll_up(id: &str, title: &'static str, claim: &'static str, parts: &[Check]) -> Check {
    let status = if parts.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if parts.iter().any(|c| c.status == Status::SkippedBudget) {
        Status::SkippedBudget
    } else {
        Status::Pass
    };
    let failed: Vec<&str> = parts.iter().filter(|c| c.status != Status::Pass).map(|c| c.id.as_str()).collect();
    let detail = if failed.is_empty() { format!("{} sub-checks", parts.len()) } else { format!("not passing: {}", failed.join(", ")) };
    Check { id: id.into(), title, claim, status, detail }
}

/// Runs the numbered checks 1 to 8, with the property sub-checks of 8
/// listed after it and, when extended, the large examples last.
pub fn run_suite(o: &SuiteOptions) -> Vec<Check> {
    let mut e = Engine { budget: o.budget, morton_checks: 0 };
    let big = if o.extended { o.budget.max(EXTENDED_BUDGET) } else { o.budget };
    let mut out = Vec::new();
    out.push(run("1", "unknot", "P(unknot) = 1", || {
        let (p, _, _) = e.homfly(&Diagram::unknot(), o.budget)?;
        ensure(p == LaurentPoly2::one(), || format!("got {p}"))?;
        Ok("P = 1".into())
    }));
    out.push(run("2", "trefoil", "M(T(2,3)) = 2 = c - s + 1, matching plain expansion", || {
        let d = t3();
        let (p, m, bound) = e.homfly(&d, o.budget)?;
        ensure(m == 2 && bound == 2, || format!("M = {m}, bound = {bound}"))?;
        let q = homfly_naive(&d, o.budget)?;
        ensure(p == q, || format!("engine {p} vs expansion {q}"))?;
        Ok(format!("P = {p}"))
    }));
    out.push(run("3", "flat double", "M(D(T(2,3), n)) = 5 for n = -1, 0, 1, 2", || {
        let mut ms = Vec::new();
        for n in -1..=2 {
            let m = e.degree(&flat_double(&t3(), n)?)?;
            ensure(m == 5, || format!("n = {n}: M = {m}"))?;
            ms.push(m);
        }
        Ok(format!("M = {ms:?}"))
    }));
    out.push(run("4", "Whitehead double", "M(W(T(2,3), 0, +)) = 6 = 2c", || {
        let m = e.degree(&whitehead_double(&t3(), 0, Clasp::Positive)?)?;
        ensure(m == 6, || format!("M = {m}"))?;
        Ok("M = 6".into())
    }));
    out.push(run("5", "Seifert census", "W(K, 0, +) has 2c + 3 circles, 4c + 2 bands, genus c", || {
        let mut rows = Vec::new();
        for (name, k) in [("T(2,3)", t3()), ("P(2,1,1)", pretzel(&[2, 1, 1])?), ("P(3,1,1)", pretzel(&[3, 1, 1])?)] {
            let c = k.crossing_count();
            let mut opts = DoubleOptions::whitehead(0, Clasp::Positive);
            opts.hidden_twists = true;
            let w = double(&k, &opts)?;
            let s = w.seifert_circles()?;
            let got = (s.circle_count, w.crossing_count(), s.canonical_genus);
            ensure(got == (2 * c + 3, 4 * c + 2, c as u64), || format!("{name}: (circles, bands, genus) = {got:?}"))?;
            rows.push(format!("{name} g = {c}"));
        }
        Ok(rows.join(", "))
    }));
    out.push(run("6", "Whitehead doubles of pretzels", "M(W(P(k), 0, +)) = 2 sum k_i", || {
        let m = e.degree(&whitehead_double(&pretzel(&[2, 1, 1])?, 0, Clasp::Positive)?)?;
        ensure(m == 8, || format!("P(2,1,1): M = {m}"))?;
        let w = whitehead_double(&pretzel(&[2, 3])?, 0, Clasp::Positive)?;
        let (_, m5, _) = e.homfly(&w, big)?;
        ensure(m5 == 10, || format!("P(2,3): M = {m5}"))?;
        Ok("P(2,1,1): 8, P(2,3): 10".into())
    }));
    out.push(run("7", "ledger", "chain ends Exact(2c - 1); degraded ends UpperBound(2c - 3)", || {
        for c in [3, 4, 10] {
            let lines = ledger_check(c).map_err(|err| Outcome::Fail(format!("c = {c}: {err}")))?;
            let root = lines.last().unwrap().bound;
            ensure(root == DegreeBound::Exact(2 * c - 1), || format!("c = {c}: root {root}"))?;
            let deg = ledger_transcript(c, LedgerVariant::Degraded).map_err(|err| Outcome::Fail(err.to_string()))?;
            let root = deg.last().unwrap().bound;
            ensure(root == DegreeBound::UpperBound(2 * c - 3), || format!("c = {c} degraded: root {root}"))?;
        }
        Ok("c = 3, 4, 10".into())
    }));
    let props = property_checks(&mut e);
    out.push(roll_up("8", "property suite", "invariants over random and constructed diagrams", &props));
    out.extend(props);
    if o.extended {
        out.push(run("X1", "Borromean rings", "M(D(L)) = 11 for the Borromean rings", || {
            let l = braid_closure(3, &[1, -2, 1, -2, 1, -2])?;
            let (_, m, _) = e.homfly(&flat_double_link(&l, 0)?, big)?;
            ensure(m == 11, || format!("M = {m}"))?;
            Ok("M = 11".into())
        }));
        out.push(run("X2", "non-alternating pretzels", "M(W(K, 0, +)) < 2c for P(3,3,-2) and P(3,-3,2)", || {
            let mut ms = Vec::new();
            for k in [[3, 3, -2], [3, -3, 2]] {
                let (_, m, _) = e.homfly(&whitehead_double(&pretzel(&k)?, 0, Clasp::Positive)?, big)?;
                ensure(m < 16, || format!("P{k:?}: M = {m}"))?;
                ms.push(m);
            }
            Ok(format!("M = {ms:?}"))
        }));
    }
    out
}

/// Plain-text table with one row per check.
pub fn format_table(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        writeln!(out, "{:<14} {:<3} {:<30} {}", c.status.label(), c.id, c.title, c.claim).unwrap();
        if !c.detail.is_empty() {
            writeln!(out, "{:<14} {:<3} {}", "", "", c.detail).unwrap();
        }
    }
    let pass = checks.iter().filter(|c| c.status == Status::Pass).count();
    let skip = checks.iter().filter(|c| c.status == Status::SkippedBudget).count();
    writeln!(out, "{pass} passed, {} failed, {skip} skipped", checks.len() - pass - skip).unwrap();
    out
}

pub fn failures(checks: &[Check]) -> usize {
    checks.iter().filter(|c| c.status == Status::Fail).count()
}
