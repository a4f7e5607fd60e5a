//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout.

use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use algmod::Side;
use coalg::{samples as co, Coalgebra, CoalgebraMorphism, RightComodule};
use contra::{samples as ct, Bicomodule, Contramodule};
use exactla::{all_subspaces, Field, Mat, Scalar, Subspace};
use rational::samples as rs;
use rational::{ActionData, RationalPairing};
use repcat::samples::{fiber_modules, objects, reps_for};
use repcat::{Flavor, Rep, RepError, RepObject};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($c:expr, $($m:tt)*) => {
        if !$c {
            return Err(format!($($m)*));
        }
    };
}

fn ok<T, E: Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn fields() -> [Field; 3] {
    [Field::Gf(2), Field::Gf(5), Field::Q]
}

fn small_fields() -> [Field; 3] {
    [Field::Gf(2), Field::Gf(3), Field::Q]
}

// 1
fn axioms() -> Outcome {
    let mut counts = [0usize; 6];
    for f in fields() {
        let mut mutated = [0usize; 3];
        let samples = co::coalgebras(&f);
        let names: Vec<&str> = samples.iter().map(|(n, _)| n.as_str()).collect();
        for want in ["K", "KG1", "KG2", "KG3", "DP1", "DP2", "DP3", "DP4", "MC2"] {
            ensure!(names.contains(&want), "{want} missing over {f}");
        }
        for (name, c) in &samples {
            ensure!(c.check().is_empty(), "{name} over {f}: {:?}", c.check());
            counts[0] += 1;
            for (what, bad) in co::mutated_coalgebras(c) {
                let v = bad.check();
                ensure!(!v.is_empty() && v.iter().all(|x| !x.witness.is_empty()), "{name} {what} over {f}");
                mutated[0] += 1;
            }
            for m in co::comodules(c) {
                ensure!(m.check().is_empty(), "comodule over {name}/{f}");
                counts[1] += 1;
                for (what, bad) in co::mutated_comodules(&m) {
                    let v = bad.check();
                    ensure!(!v.is_empty() && v.iter().all(|x| !x.witness.is_empty()), "{name} {what} over {f}");
                    mutated[1] += 1;
                }
            }
            for m in ct::contramodules(c) {
                ensure!(m.check().is_empty(), "contramodule over {name}/{f}");
                counts[2] += 1;
                for (what, bad) in ct::mutated_contramodules(&m) {
                    let v = bad.check();
                    ensure!(!v.is_empty() && v.iter().all(|x| !x.witness.is_empty()), "{name} {what} over {f}");
                    mutated[2] += 1;
                }
            }
        }
        ensure!(mutated.iter().all(|&n| n >= 10), "too few mutations over {f}: {mutated:?}");
        for i in 0..3 {
            counts[3 + i] += mutated[i];
        }
    }
    Ok(format!(
        "valid {}/{}/{} coalgebras/comodules/contramodules; mutations rejected {}/{}/{}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5]
    ))
}

// 2
fn cotensor_unit() -> Outcome {
    let mut n = 0;
    for f in fields() {
        for (name, c) in co::coalgebras(&f) {
            let mut ms = co::comodules(&c);
            ms.push(RightComodule::regular(&c));
            for m in ms {
                let (s, map) = ok(coalg::cotensor_unit_map(&m), &name)?;
                ensure!(s.dim() == m.dim() && map.is_invertible(), "{name} over {f}");
                n += 1;
            }
        }
    }
    Ok(format!("{n} comodules"))
}

// 3
fn adjunctions() -> Outcome {
    let mut counts: Vec<(String, usize)> = Vec::new();
    let mut bump = |k: &str| match counts.iter_mut().find(|(n, _)| n == k) {
        Some(e) => e.1 += 1,
        None => counts.push((k.to_string(), 1)),
    };
    for f in small_fields() {
        for (name, al) in co::morphisms(&f) {
            let (ms, ns) = (co::comodules(&al.source), co::comodules(&al.target));
            for m in ms.iter().take(3) {
                for n in ns.iter().take(3) {
                    let c = ok(coalg::certify_corestrict_coinduce(&al, m, n), &name)?;
                    ensure!(c.holds(), "corestrict/coinduce {name}: {c:?}");
                    bump("corestrict-coinduce");
                    let c = ok(coalg::certify_cohom_corestrict(&al, n, m), &name)?;
                    ensure!(c.holds(), "cohom/corestrict {name}: {c:?}");
                    bump("cohom-corestrict");
                }
            }
            let (ms, ns) = (ct::contramodules(&al.target), ct::contramodules(&al.source));
            for m in ms.iter().take(3) {
                for n in ns.iter().take(3) {
                    let c = ok(contra::certify_contraextend_contrarestrict(&al, m, n), &name)?;
                    ensure!(c.holds(), "contraextend/contrarestrict {name}: {c:?}");
                    bump("contraextend-contrarestrict");
                }
            }
        }
        for (name, al) in algmod::samples::morphisms(&f) {
            for side in [Side::Right, Side::Left] {
                let ms = algmod::samples::modules(&al.source, side);
                let ns = algmod::samples::modules(&al.target, side);
                for m in ms.iter().take(3) {
                    for n in ns.iter().take(3) {
                        let c = ok(algmod::certify_extend_restrict(&al, m, n), &name)?;
                        ensure!(c.holds(), "extend/restrict {name}: {c:?}");
                        bump("extend-restrict");
                        let c = ok(algmod::certify_restrict_coextend(&al, n, m), &name)?;
                        ensure!(c.holds(), "restrict/coextend {name}: {c:?}");
                        bump("restrict-coextend");
                    }
                }
            }
        }
        for flavor in Flavor::ALL {
            for (name, rep) in reps_for(flavor, &f) {
                let objs = objects(flavor, &rep, 5);
                for x in 0..rep.poset().len() {
                    for v in fiber_modules(flavor, &rep, x).iter().take(2) {
                        for m in objs.iter().take(3) {
                            let c = ok(repcat::certify_ex_ev(x, v, m), &name)?;
                            ensure!(c.holds(), "ex/ev {flavor} {name} at {x}: {c:?}");
                            bump(&format!("ex-ev {flavor}"));
                            let c = ok(repcat::certify_ev_coe(x, m, v), &name)?;
                            ensure!(c.holds(), "ev/coe {flavor} {name} at {x}: {c:?}");
                            bump(&format!("ev-coe {flavor}"));
                        }
                    }
                }
            }
        }
    }
    ensure!(counts.len() == 5 + 2 * Flavor::ALL.len(), "missing adjunctions: {counts:?}");
    ensure!(counts.iter().all(|(_, n)| *n >= 20), "fewer than 20 triples: {counts:?}");
    let min = counts.iter().map(|(_, n)| *n).min().unwrap_or(0);
    Ok(format!("{} adjunction/flavor pairs, at least {min} triples each", counts.len()))
}

fn bicomodules(c: &Coalgebra) -> Vec<Bicomodule> {
    let mut out = vec![Bicomodule::regular(c)];
    if c.is_cocommutative() {
        out.extend(co::comodules(c).iter().map(|n| Bicomodule::from_cocommutative(n).expect("cocommutative")));
    }
    out
}

// 4
fn dual_bridges() -> Outcome {
    let (mut coind, mut tens) = (0, 0);
    for f in small_fields() {
        for (name, al) in co::morphisms(&f) {
            for n in co::comodules(&al.target) {
                ensure!(ok(coalg::coinductions_agree(&al, &n), &name)?, "coinduction {name} over {f}");
                coind += 1;
            }
        }
        for (name, c) in co::coalgebras(&f) {
            for m in ct::contramodules(&c).iter().take(3) {
                for b in bicomodules(&c).iter().take(3) {
                    let iso = ok(contra::contratensor_comparison(m, b), &name)?;
                    ensure!(iso.rows() == iso.cols() && iso.is_invertible(), "contratensor {name} over {f}");
                    tens += 1;
                }
            }
        }
    }
    ensure!(coind >= 20 && tens >= 20, "{coind} coinductions, {tens} contratensors");
    Ok(format!("{coind} coinductions, {tens} contratensors"))
}

/// `N -> N/S` for every sample comodule and cyclic subcomodule `S`.
fn surjections(d: &Coalgebra) -> Result<Vec<(RightComodule, RightComodule, Mat)>, String> {
    let f = d.field();
    let mut out = Vec::new();
    for n in co::comodules(d) {
        for i in 0..n.dim() {
            let (_, inc) = ok(coalg::generated_subcomodule(&n, &[unit(f, n.dim(), i)]), "generated")?;
            let (q, p) = ok(n.quotient(&exactla::image(&inc)), "quotient")?;
            out.push((n.clone(), q, p.projection));
        }
    }
    Ok(out)
}

// 5
fn coflatness() -> Outcome {
    let mut n = 0;
    let mut sequences = 0;
    for f in small_fields() {
        ensure!(!coalg::is_coflat(&CoalgebraMorphism::divided_power_inclusion(&f, 2, 3)), "DP(2) -> DP(3) over {f}");
        for (name, c) in co::coalgebras(&f) {
            ensure!(coalg::is_coflat(&CoalgebraMorphism::counit_of(&c)), "{name} -> K over {f}");
            n += 1;
        }
        let mut morphisms = co::morphisms(&f);
        morphisms.push(("DP2 -> DP3".into(), CoalgebraMorphism::divided_power_inclusion(&f, 2, 3)));
        for (name, al) in morphisms {
            let mut preserved = true;
            for (m, q, p) in surjections(&al.target)? {
                let (cm, cq) = (ok(coalg::coinduce(&al, &m), &name)?, ok(coalg::coinduce(&al, &q), &name)?);
                preserved &= ok(coalg::coinduce_map(&cm, &cq, &p), &name)?.is_surjective();
                sequences += 1;
            }
            ensure!(coalg::is_coflat(&al) == preserved, "{name} over {f}: coflat disagrees with exactness");
        }
    }
    Ok(format!("DP(2) -> DP(3) not coflat; {n} counits coflat; {sequences} short exact sequences agree"))
}

// brute-force helpers for 6 and 7

fn unit(f: &Field, d: usize, i: usize) -> Vec<Scalar> {
    (0..d).map(|j| if i == j { f.one() } else { f.zero() }).collect()
}

fn stable(m: &RepObject, subs: &[Subspace]) -> bool {
    for (x, s) in subs.iter().enumerate() {
        let fib = m.fiber(x);
        for b in 0..m.base().algebra(x).dim() {
            if !s.contains_subspace(&s.image_under(fib.op(b))) {
                return false;
            }
        }
    }
    m.transitions().into_iter().all(|(s, t)| match m.transition(s, t) {
        Some(map) => subs[t].contains_subspace(&subs[s].image_under(&map)),
        None => false,
    })
}

/// Every family of fiber subspaces closed under the structure.
fn subobjects(m: &RepObject) -> Vec<Vec<Subspace>> {
    let f = m.field();
    let mut out: Vec<Vec<Subspace>> = vec![vec![]];
    for d in m.dims() {
        let subs = all_subspaces(f, d).expect("finite field");
        out = out
            .into_iter()
            .flat_map(|prefix| {
                subs.iter().map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter().filter(|c| stable(m, c)).collect()
}

fn contains_all(big: &[Subspace], small: &[Subspace]) -> bool {
    big.iter().zip(small).all(|(b, s)| b.contains_subspace(s))
}

fn seeds(f: &Field, d: usize) -> Vec<Vec<Vec<Scalar>>> {
    let mut out = vec![vec![vec![f.zero(); d]]];
    for i in 0..d {
        out.push(vec![unit(f, d, i)]);
    }
    if d >= 2 {
        out.push(vec![vec![f.one(); d]]);
        out.push(vec![unit(f, d, 0), unit(f, d, d - 1)]);
    }
    out
}

fn gf2_corpus() -> Vec<(Flavor, String, RepObject, Vec<Vec<Subspace>>)> {
    let f = Field::Gf(2);
    let mut out = Vec::new();
    for flavor in Flavor::ALL {
        for (name, rep) in reps_for(flavor, &f) {
            for o in objects(flavor, &rep, 6) {
                let subs = subobjects(&o);
                out.push((flavor, name.clone(), o, subs));
            }
        }
    }
    out
}

// 6
fn generated_subobjects(corpus: &[(Flavor, String, RepObject, Vec<Vec<Subspace>>)]) -> Outcome {
    let mut per = [0usize; 5];
    for (flavor, name, m, cands) in corpus {
        ensure!(m.total_dim() <= 6, "{name}: total dimension {}", m.total_dim());
        for x in 0..m.len() {
            for seed in seeds(m.field(), m.fiber(x).dim()) {
                let got = ok(m.generated_subspaces(x, &seed), name)?;
                let containing: Vec<&Vec<Subspace>> = cands.iter().filter(|c| seed.iter().all(|v| c[x].contains(v))).collect();
                let least = containing.iter().find(|c| containing.iter().all(|o| contains_all(o, c)));
                let Some(least) = least else {
                    return Err(format!("{flavor} {name}: no least subobject"));
                };
                ensure!(contains_all(&got, least) && contains_all(least, &got), "{flavor} {name} at {x}");
                let (sub, inc) = ok(m.generated_subobject(x, &seed), name)?;
                ensure!(sub.check().is_empty() && inc.check().is_empty() && inc.is_mono(), "{flavor} {name} at {x}");
                per[Flavor::ALL.iter().position(|f| f == flavor).unwrap_or(0)] += 1;
            }
        }
    }
    ensure!(per.iter().all(|&n| n >= 20), "instances per flavor {per:?}");
    Ok(format!("{} objects, seeds per flavor {per:?}", corpus.len()))
}

// 7
fn hulls(corpus: &[(Flavor, String, RepObject, Vec<Vec<Subspace>>)]) -> Outcome {
    let (mut n, mut full, mut cartesian) = (0, 0, 0);
    for (flavor, name, m, cands) in corpus {
        if !ok(repcat::is_cartesian(m), name)?.cartesian {
            ensure!(
                matches!(repcat::cartesian_hull(m, 0, &[]), Err(RepError::Precondition(_))),
                "{flavor} {name}: hull of a non-cartesian object"
            );
            continue;
        }
        cartesian += 1;
        let cart: Vec<&Vec<Subspace>> = cands
            .iter()
            .filter(|c| m.subobject(c).ok().and_then(|(s, _)| repcat::is_cartesian(&s).ok()).is_some_and(|r| r.cartesian))
            .collect();
        let mut acc: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::zero(m.field(), d)).collect();
        let mut spanned = true;
        for x in 0..m.len() {
            for seed in seeds(m.field(), m.fiber(x).dim()) {
                let got = match repcat::cartesian_hull_subspaces(m, x, &seed) {
                    Ok(g) => g,
                    Err(RepError::Hypothesis(_)) => continue,
                    Err(e) => return Err(format!("{flavor} {name}: {e}")),
                };
                ensure!(seed.iter().all(|v| got[x].contains(v)), "{flavor} {name}: seed not contained");
                let (sub, _) = ok(repcat::cartesian_hull(m, x, &seed), name)?;
                ensure!(ok(repcat::is_cartesian(&sub), name)?.cartesian, "{flavor} {name}: hull not cartesian");
                for c in cart.iter().filter(|c| seed.iter().all(|v| c[x].contains(v))) {
                    ensure!(contains_all(c, &got), "{flavor} {name} at {x}: hull not minimal");
                }
                n += 1;
            }
            let d = m.fiber(x).dim();
            let all: Vec<Vec<Scalar>> = (0..d).map(|i| unit(m.field(), d, i)).collect();
            match repcat::cartesian_hull_subspaces(m, x, &all) {
                Ok(h) => {
                    ensure!(h[x].dim() == d, "{flavor} {name}: spanning seed lost at {x}");
                    acc = acc.iter().zip(&h).map(|(a, b)| a.sum(b).expect("same ambient")).collect();
                }
                Err(RepError::Hypothesis(_)) => spanned = false,
                Err(e) => return Err(format!("{flavor} {name}: {e}")),
            }
        }
        if spanned {
            ensure!(acc.iter().zip(m.dims()).all(|(s, d)| s.dim() == d), "{flavor} {name}: full seed hull is proper");
            full += 1;
        }
    }
    ensure!(n > 0 && full > 0, "nothing checked");
    Ok(format!("{n} hulls minimal in {cartesian} cartesian objects; {full} full-seed hulls are the whole object"))
}

// 8
fn rationalization() -> Outcome {
    let mut checked = 0;
    for f in [Field::Gf(3), Field::Q] {
        let p = rs::dp2_kx(&f);
        let w = ok(rational::torsion_witness(&p, &rs::kx_module(&f, rs::jordan(&f, 3))), "J3")?;
        let dims = (w.rational.subspace.dim(), w.quotient_rational.subspace.dim());
        ensure!(dims == (2, 1), "J3 over {f}: {dims:?}");
        let mats = [
            rs::jordan(&f, 2),
            rs::jordan(&f, 3),
            rs::jordan(&f, 4),
            Mat::identity(&f, 2),
            Mat::from_i64(&f, 3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 2]),
        ];
        for x in mats {
            let n = rs::kx_module(&f, x);
            let r = ok(rational::rationalize(&p, &n), "R")?;
            let rr = ok(rational::rationalize(&p, &r.action), "R R")?;
            ensure!(rr.subspace.dim() == r.subspace.dim(), "R not idempotent over {f}");
            let ActionData::Presented(act) = &n else { return Err("kx_module is presented".into()) };
            for i in 0..act.dim() {
                let sub = ok(algmod::fp_submodule_generated(act, &[unit(&f, act.dim(), i)]), "sub")?;
                let small = ActionData::Presented(ok(act.restrict_to(&sub), "restrict")?);
                let pushed = ok(rational::rationalize(&p, &small), "R sub")?.subspace.image_under(sub.basis());
                ensure!(r.subspace.contains_subspace(&pushed), "R not monotone over {f}");
            }
            checked += 1;
        }
    }
    let mut closures = 0;
    for f in small_fields() {
        for (name, c) in co::coalgebras(&f) {
            let p = RationalPairing::evaluation(&c);
            let a = c.dual_algebra();
            let mut mods = rs::left_modules(&a);
            mods.push(rs::regular(&a));
            for m in mods {
                let r = ok(rational::rationalize(&p, &m), &name)?;
                ensure!(r.subspace.dim() == m.dim(), "{name} over {f}: R(N) != N");
                let ActionData::Module(md) = &m else { continue };
                if md.dim() > 6 {
                    continue;
                }
                for i in 0..md.dim() {
                    let s = ok(md.generated(&[unit(&f, md.dim(), i)]), "generated")?;
                    let (sub, _) = ok(md.submodule(&s), "submodule")?;
                    let (quo, _) = ok(md.quotient(&s), "quotient")?;
                    let sub_r = ok(rational::is_rational(&p, &ActionData::Module(sub)), "sub")?;
                    let quo_r = ok(rational::is_rational(&p, &ActionData::Module(quo)), "quotient")?;
                    let mid_r = ok(rational::is_rational(&p, &m), "middle")?;
                    ensure!(!mid_r || quo_r, "{name}: quotient closure");
                    ensure!(!(sub_r && quo_r) || mid_r, "{name}: extension closure");
                    closures += 1;
                }
            }
        }
    }
    Ok(format!("J3 gives (2, 1); {checked} idempotent/monotone modules; {closures} exact sequences over C*"))
}

// 9
fn base_change_and_fg() -> Outcome {
    let mut per_field = Vec::new();
    for f in [Field::Gf(3), Field::Q] {
        let mut n = 0;
        for (name, alpha) in rs::cocommutative_morphisms(&f) {
            let ms = ct::contramodules(&alpha.target);
            let ns = co::comodules(&alpha.target);
            let ps = co::comodules(&alpha.source);
            for m in ms.iter().take(2) {
                for nn in ns.iter().take(2) {
                    for p in ps.iter().take(2) {
                        let r = ok(rational::base_change_certificates(&alpha, m, nn, p), &name)?;
                        ensure!(r.holds(), "{name} over {f}: {r:?}");
                        n += 1;
                    }
                }
            }
        }
        ensure!(n >= 10, "{n} base-change instances over {f}");
        per_field.push(n);
    }
    let mut fg = 0;
    for f in [Field::Gf(3), Field::Q] {
        for (name, rep) in reps_for(Flavor::TransComodule, &f) {
            let Rep::Coalgebra(c) = &rep else { continue };
            if !c.is_cocommutative() {
                continue;
            }
            let ns: Vec<RepObject> = objects(Flavor::TransComodule, &rep, 4)
                .into_iter()
                .filter(|o| repcat::is_cartesian(o).is_ok_and(|r| r.cartesian))
                .take(2)
                .collect();
            let ms = objects(Flavor::TransContramodule, &rep, 4);
            let ps = objects(Flavor::TransComodule, &rep, 4);
            for nn in &ns {
                for m in ms.iter().take(2) {
                    for p in ps.iter().take(2) {
                        let cert = ok(repcat::certify_fg(m, nn, p), &name)?;
                        ensure!(cert.holds(), "F/G {name} over {f}: {cert:?}");
                        fg += 1;
                    }
                }
            }
        }
    }
    ensure!(fg >= 10, "{fg} F/G triples");
    Ok(format!("base change {per_field:?} instances over GF(3)/Q; {fg} F/G triples"))
}

// 10
fn contramodule_frees() -> Outcome {
    let mut n = 0;
    for f in small_fields() {
        for (name, al) in co::morphisms(&f) {
            for v in 0..3 {
                let (ext, cmp) = ok(contra::free_extension_comparison(&al, v), &name)?;
                let t = Contramodule::free(&al.source, v);
                ensure!(ext.contramodule.dim() == t.dim(), "{name}: dims");
                ensure!(cmp.is_invertible() && contra::is_contra_map(&t, &ext.contramodule, &cmp), "{name}: not iso");
                n += 1;
            }
        }
        for (name, c) in co::coalgebras(&f) {
            for (v, w) in [(1, 1), (1, 2), (0, 2), (2, 0)] {
                let sum = ok(Contramodule::free(&c, v).direct_sum(&Contramodule::free(&c, w)), &name)?;
                ensure!(sum == Contramodule::free(&c, v + w), "{name}: T({v}) + T({w})");
                n += 1;
            }
            let (t, map) = ok(contra::free_contratensor_comparison(&Bicomodule::regular(&c)), &name)?;
            ensure!(t.comodule.dim() == c.dim() && map.is_invertible(), "{name}: C* contratensor C");
            ensure!(coalg::is_comodule_map(&t.comodule, &RightComodule::regular(&c), &map), "{name}: not a comodule map");
            n += 1;
        }
    }
    Ok(format!("{n} instances"))
}

// 11
fn cli_determinism() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut files: Vec<PathBuf> = ok(std::fs::read_dir(&dir), "corpus")?.filter_map(|e| e.ok().map(|e| e.path())).collect();
    files.sort();
    ensure!(!files.is_empty(), "empty corpus");
    let commands: &[&[&str]] = &[
        &["validate"],
        &["check", "coalgebra"],
        &["check", "comodule"],
        &["check", "contramodule"],
        &["check", "representation"],
        &["check", "object"],
        &["check", "cartesian"],
        &["check", "coflat"],
        &["check", "sigma-injective"],
        &["check", "pairing"],
        &["adjunction", "corestrict-coinduce"],
        &["adjunction", "cohom-corestrict"],
        &["adjunction", "contraextend-contrarestrict"],
        &["adjunction", "ex-ev"],
        &["adjunction", "ev-coe"],
        &["adjunction", "FG"],
        &["generators"],
        &["rationalize"],
    ];
    let mut runs = 0;
    for path in &files {
        let text = ok(std::fs::read_to_string(path), "read")?;
        let doc = ok(cli::parse(&text), &path.display().to_string())?;
        let encoded = cli::encode(&doc);
        ensure!(encoded == text, "{} is not in canonical form", path.display());
        ensure!(ok(cli::parse(&encoded), "reparse")? == doc, "{} does not round-trip", path.display());
        let p = path.to_string_lossy().into_owned();
        let mut with_objects: Vec<Vec<String>> = commands.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
        for name in doc.objects.keys() {
            with_objects.push(vec!["hull".into(), "--object".into(), name.clone()]);
        }
        for args in with_objects {
            for output in ["text", "json"] {
                let argv: Vec<String> = std::iter::once("comod".to_string())
                    .chain(args.iter().cloned())
                    .chain(["--output".into(), output.into(), "--input".into(), p.clone()])
                    .collect();
                let first = cli::execute(argv.clone());
                let second = cli::execute(argv.clone());
                ensure!(first == second, "{args:?} on {} differs between runs", path.display());
                ensure!(first.code != 2, "{args:?} on {}: {}", path.display(), first.stderr);
                if output == "json" {
                    let r = ok(cli::Report::from_json(&first.stdout), "report")?;
                    ensure!(r.to_json() == first.stdout, "{args:?}: report does not round-trip");
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{} files, {runs} invocations run twice", files.len()))
}

fn main() {
    let started = Instant::now();
    let mut failed = 0;
    let mut report = |n: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {n:>2} {name}: {why} ({secs:.1}s)");
            }
        }
    };
    report(1, "axiom suites", &mut axioms);
    report(2, "cotensor unit", &mut cotensor_unit);
    report(3, "adjunction certificates", &mut adjunctions);
    report(4, "dual-bridge consistency", &mut dual_bridges);
    report(5, "coflatness", &mut coflatness);
    let corpus = gf2_corpus();
    report(6, "generated subobjects", &mut || generated_subobjects(&corpus));
    report(7, "cartesian hull", &mut || hulls(&corpus));
    report(8, "rationalization", &mut rationalization);
    report(9, "base change and F/G", &mut base_change_and_fg);
    report(10, "contramodule frees", &mut contramodule_frees);
    report(11, "CLI determinism", &mut cli_determinism);
    println!("acceptance: {} of 11 criteria pass in {:.1}s", 11 - failed, started.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
