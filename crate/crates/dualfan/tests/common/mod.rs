//! Brute-force oracles and property checks shared by the property suites and
//! the acceptance run. Nothing here calls the library's own linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use dualfan::fans::{is_complete, is_dual_pair, validate_fan, Fan};
use dualfan::lattice::{snf, LatticeMap};
use dualfan::polyhedra::{lattice_points, Cone, Polytope};
use dualfan::toric_lg::{
    auxiliary_lg_from_potential, is_cartier, is_regular_character, lg_from_dual_fans, recover_ci_data,
    split_bundle_fan, ToricDivisor,
};
use dualfan::{Int, IntVec, Rat, RatVec};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

// ---------------------------------------------------------------- linear algebra

fn r(x: &Int) -> Rat {
    Rat::from_integer(x.clone())
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(rows: &mut [RatVec], n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let lead = rows[row][col].clone();
        for x in rows[row].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..rows.len() {
            if i != row && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..n {
                    let v = &f * &rows[row][j];
                    rows[i][j] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank_q(rows: &[RatVec], n: usize) -> usize {
    rref(&mut rows.to_vec(), n).len()
}

pub fn nullspace(rows: &[RatVec], n: usize) -> Vec<RatVec> {
    let mut m = rows.to_vec();
    let piv = rref(&mut m, n);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); n];
            v[f] = Rat::one();
            for (i, &p) in piv.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn det_q(rows: &[IntVec]) -> Int {
    let n = rows.len();
    let mut m: Vec<RatVec> = rows.iter().map(|row| row.iter().map(r).collect()).collect();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Int::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let v = &f * &m[c][j];
                m[i][j] -= v;
            }
        }
    }
    det.to_integer()
}

pub fn primitive_q(v: &[Rat]) -> IntVec {
    let l = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: IntVec = v.iter().map(|x| (x * r(&l)).to_integer()).collect();
    let g = ints.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.iter().map(|x| x / &g).collect()
    }
}

fn dot_q(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_q(v: &[Int]) -> RatVec {
    v.iter().map(r).collect()
}

fn mat_mul(a: &[IntVec], b: &[IntVec]) -> Vec<IntVec> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Product of the first `k` invariant factors: gcd of all `k x k` minors.
pub fn determinantal_divisor(a: &[IntVec], k: usize) -> Int {
    let rows = a.len();
    let cols = a[0].len();
    let mut g = Int::zero();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let minor: Vec<IntVec> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect()).collect();
            g = g.gcd(&det_q(&minor));
        }
    }
    g
}

// ---------------------------------------------------------------- cones

/// Brute-force dual of `cone(gens)`: dimension of the lineality space and
/// the extreme rays, each recorded by its primitive vector of values on the
/// generators (independent of the representative modulo lineality).
pub fn dual_cone_oracle(gens: &[IntVec], n: usize) -> (usize, BTreeSet<IntVec>) {
    let g: Vec<RatVec> = gens.iter().map(|x| to_q(x)).collect();
    let rk = rank_q(&g, n);
    let lin = nullspace(&g, n);
    let mut rays = BTreeSet::new();
    if rk == 0 {
        return (n, rays);
    }
    for s in subsets(g.len(), rk - 1) {
        let mut rows: Vec<RatVec> = s.iter().map(|&i| g[i].clone()).collect();
        rows.extend(lin.iter().cloned());
        let ns = nullspace(&rows, n);
        if ns.len() != 1 {
            continue;
        }
        let vals: RatVec = g.iter().map(|x| dot_q(x, &ns[0])).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            rays.insert(primitive_q(&vals));
        } else if vals.iter().all(|v| !v.is_positive()) {
            rays.insert(primitive_q(&vals.iter().map(|v| -v).collect::<RatVec>()));
        }
    }
    (lin.len(), rays)
}

pub fn check_dual_cone(gens: &[IntVec], n: usize) -> Result<(), String> {
    let c = Cone::new(n, gens).map_err(|e| e.to_string())?;
    let d = c.dual();
    let (lin, rays) = dual_cone_oracle(gens, n);
    if d.lineality_basis().len() != lin {
        return Err(format!("lineality {} vs oracle {lin} for {gens:?}", d.lineality_basis().len()));
    }
    let g: Vec<RatVec> = gens.iter().map(|x| to_q(x)).collect();
    let got: BTreeSet<IntVec> = d
        .rays()
        .iter()
        .map(|x| primitive_q(&g.iter().map(|gi| dot_q(gi, &to_q(x))).collect::<RatVec>()))
        .collect();
    if got.len() != d.rays().len() || got != rays {
        return Err(format!("dual rays {:?} vs oracle {rays:?} for {gens:?}", d.rays()));
    }
    Ok(())
}

pub fn check_dual_dual(gens: &[IntVec], n: usize) -> Result<(), String> {
    let c = Cone::new(n, gens).map_err(|e| e.to_string())?;
    let dd = c.dual().dual();
    if !(c.contains_cone(&dd) && dd.contains_cone(&c)) || dd.dim() != c.dim() {
        return Err(format!("dual of dual differs for {gens:?}"));
    }
    if c.is_strongly_convex() {
        let a: BTreeSet<&IntVec> = c.rays().iter().collect();
        let b: BTreeSet<&IntVec> = dd.rays().iter().collect();
        if a != b {
            return Err(format!("rays {a:?} vs {b:?}"));
        }
    }
    Ok(())
}

pub fn cone_gens() -> impl Strategy<Value = (usize, Vec<IntVec>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(-5i64..=5, n), 1..=6)
                .prop_map(|g| g.into_iter().map(|v| v.into_iter().map(Int::from).collect()).collect()),
        )
    })
}

// ---------------------------------------------------------------- SNF

pub fn int_matrix() -> impl Strategy<Value = Vec<IntVec>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(-20i64..=20, n), m)
            .prop_map(|a| a.into_iter().map(|r| r.into_iter().map(Int::from).collect()).collect())
    })
}

pub fn check_snf(a: &[IntVec]) -> Result<(), String> {
    let cols = a[0].len();
    let lm = LatticeMap::from_rows(cols, a.to_vec()).unwrap();
    let s = snf(&lm);
    let u = s.u.entries().to_vec();
    let v = s.v.entries().to_vec();
    let d = s.d.entries().to_vec();
    if u.len() != a.len() || v.len() != cols || d.len() != a.len() || d.iter().any(|r| r.len() != cols) {
        return Err("shapes".into());
    }
    if !det_q(&u).abs().is_one() || !det_q(&v).abs().is_one() {
        return Err("U or V not unimodular".into());
    }
    if mat_mul(&mat_mul(&u, a), &v) != d {
        return Err(format!("U A V != D for {a:?}"));
    }
    let k = a.len().min(cols);
    for i in 0..a.len() {
        for j in 0..cols {
            if i != j && !d[i][j].is_zero() {
                return Err("D not diagonal".into());
            }
        }
    }
    let diag: Vec<Int> = (0..k).map(|i| d[i][i].clone()).collect();
    if diag.iter().any(|x| x.is_negative()) {
        return Err("negative invariant factor".into());
    }
    for w in diag.windows(2) {
        if !(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero())) {
            return Err(format!("divisibility fails in {diag:?}"));
        }
    }
    let mut prod = Int::one();
    for i in 0..k {
        prod *= &diag[i];
        if prod != determinantal_divisor(a, i + 1) {
            return Err(format!("determinantal divisor {} disagrees for {diag:?}", i + 1));
        }
    }
    if snf(&lm) != s {
        return Err("not deterministic".into());
    }
    Ok(())
}

// ---------------------------------------------------------------- polytopes

/// Facet inequalities `a . x >= b` of a full-dimensional hull, from every
/// hyperplane through `n` of the points that has all points on one side.
pub fn brute_facets(points: &[RatVec], n: usize) -> Vec<(RatVec, Rat)> {
    let mut out = Vec::new();
    for s in subsets(points.len(), n) {
        let diffs: Vec<RatVec> = s[1..]
            .iter()
            .map(|&i| points[i].iter().zip(&points[s[0]]).map(|(a, b)| a - b).collect())
            .collect();
        let ns = nullspace(&diffs, n);
        if ns.len() != 1 {
            continue;
        }
        let a = &ns[0];
        let b = dot_q(a, &points[s[0]]);
        let vals: Vec<Rat> = points.iter().map(|p| dot_q(a, p) - &b).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            out.push((a.clone(), b));
        } else if vals.iter().all(|v| !v.is_positive()) {
            out.push((a.iter().map(|x| -x).collect(), -b));
        }
    }
    out
}

pub fn is_full_dim(points: &[RatVec], n: usize) -> bool {
    let diffs: Vec<RatVec> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    rank_q(&diffs, n) == n
}

pub fn grid_scan(points: &[RatVec], n: usize) -> BTreeSet<IntVec> {
    let facets = brute_facets(points, n);
    let lo: Vec<i64> = (0..n)
        .map(|i| points.iter().map(|p| p[i].floor().to_integer()).min().unwrap().try_into().unwrap())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| points.iter().map(|p| p[i].ceil().to_integer()).max().unwrap().try_into().unwrap())
        .collect();
    let mut out = BTreeSet::new();
    let mut x = lo.clone();
    loop {
        let xv: RatVec = x.iter().map(|&c| Rat::from_integer(c.into())).collect();
        if facets.iter().all(|(a, b)| dot_q(a, &xv) >= *b) {
            out.insert(x.iter().map(|&c| Int::from(c)).collect());
        }
        let mut i = 0;
        while i < n {
            x[i] += 1;
            if x[i] <= hi[i] {
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

/// Random full-dimensional point sets; coordinates in `[-4, 4]` divided by
/// a denominator in `1..=3`.
pub fn polytope_points() -> impl Strategy<Value = (usize, Vec<RatVec>)> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let bound = if n == 4 { 3 } else { 4 };
            (
                Just(n),
                prop::collection::vec(prop::collection::vec(-bound..=bound, n), n + 1..=n + 4),
                1i64..=3,
            )
        })
        .prop_map(|(n, pts, den)| {
            let pts: Vec<RatVec> = pts
                .into_iter()
                .map(|p| p.into_iter().map(|c| Rat::new(Int::from(c), Int::from(den))).collect::<RatVec>())
                .collect();
            (n, pts)
        })
        .prop_filter("full dimensional", |(n, pts)| is_full_dim(pts, *n))
}

pub fn check_lattice_points(points: &[RatVec], n: usize) -> Result<(), String> {
    let p = Polytope::from_points(n, points).map_err(|e| e.to_string())?;
    let got: BTreeSet<IntVec> = lattice_points(&p).map_err(|e| e.to_string())?.into_iter().collect();
    let want = grid_scan(points, n);
    if got != want {
        return Err(format!("{} points vs {} from the scan", got.len(), want.len()));
    }
    Ok(())
}

// ---------------------------------------------------------------- fans

/// Smooth complete fans in rank 2: start from `P^2`, `P^1 x P^1` or a
/// Hirzebruch surface and blow up random adjacent pairs.
pub fn smooth_complete_2d() -> impl Strategy<Value = Fan> {
    (0usize..3, 0i64..=3, prop::collection::vec(0usize..64, 0..4)).prop_map(|(start, a, blowups)| {
        let mut rays: Vec<[i64; 2]> = match start {
            0 => vec![[1, 0], [0, 1], [-1, -1]],
            1 => vec![[1, 0], [0, 1], [-1, 0], [0, -1]],
            _ => vec![[1, 0], [0, 1], [-1, a], [0, -1]],
        };
        for b in blowups {
            let i = b % rays.len();
            let j = (i + 1) % rays.len();
            let new = [rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]];
            rays.insert(i + 1, new);
        }
        let k = rays.len();
        let cones = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
        Fan::new(2, rays.iter().map(|x| dualfan::ivec(x)).collect(), cones).unwrap()
    })
}

/// Face census of a complete simplicial fan of dimension `d`: each
/// codimension-one cone lies in exactly two maximal cones, and the face
/// numbers have alternating sum `(-1)^d`.
pub fn check_complete_census(f: &Fan) -> Result<(), String> {
    let d = f.rank();
    let mut counts = vec![0i64; d + 1];
    for dim in f.cone_sets().values() {
        counts[*dim] += 1;
    }
    let maxc = f.max_cones().len() as i64;
    if counts[d] != maxc {
        return Err(format!("{} top cones vs {maxc} maximal cones", counts[d]));
    }
    if d > 0 && 2 * counts[d - 1] != d as i64 * maxc {
        return Err(format!("facet census {counts:?}"));
    }
    let euler: i64 = counts.iter().enumerate().map(|(k, c)| if k % 2 == 0 { *c } else { -*c }).sum();
    if euler != if d.is_multiple_of(2) { 1 } else { -1 } {
        return Err(format!("euler characteristic of {counts:?}"));
    }
    Ok(())
}

/// A full-dimensional cone `sigma` in rank 2 or 3, the fan of its faces and
/// a fan supported in `sigma^v` spanned by a nonempty subset of its rays.
pub fn dual_pair() -> impl Strategy<Value = (Fan, Fan, Vec<i64>)> {
    (2usize..=3)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(prop::collection::vec(-4i64..=4, n), n..=n + 2),
                prop::collection::vec(any::<bool>(), 8),
                prop::collection::vec(-4i64..=4, n),
            )
        })
        .prop_filter_map("pointed full-dimensional cone", |(n, gens, pick, bad)| {
            let gens: Vec<IntVec> = gens.iter().map(|g| dualfan::ivec(g)).collect();
            let c = Cone::new(n, &gens).ok()?;
            if !c.is_full_dimensional() || !c.is_strongly_convex() {
                return None;
            }
            let s = Fan::new(n, c.rays().to_vec(), vec![(0..c.rays().len()).collect()]).ok()?;
            let d = c.dual();
            let chosen: Vec<IntVec> = d
                .rays()
                .iter()
                .enumerate()
                .filter(|(i, _)| pick[*i % pick.len()])
                .map(|(_, x)| x.clone())
                .collect();
            let chosen = if chosen.is_empty() { vec![d.rays()[0].clone()] } else { chosen };
            let sp = Fan::new(n, chosen.clone(), vec![(0..chosen.len()).collect()]).ok()?;
            Some((s, sp, bad))
        })
}

/// Every exponent of `W(Sigma')` is regular on `Sigma`; adding a ray with
/// an irregular generator breaks duality in both directions. Returns
/// whether an irregular exponent was injected.
pub fn check_regularity_duality(s: &Fan, sp: &Fan, bad: &[i64]) -> Result<bool, String> {
    let fwd = is_dual_pair(s, sp).map_err(|e| e.to_string())?;
    let back = is_dual_pair(sp, s).map_err(|e| e.to_string())?;
    if !fwd.verdict || !back.verdict {
        return Err("generated pair is not dual".into());
    }
    let lg = lg_from_dual_fans(s, sp).map_err(|e| e.to_string())?;
    if !lg.exponents.iter().all(|m| is_regular_character(m, s)) {
        return Err("irregular exponent in W(Sigma')".into());
    }
    auxiliary_lg_from_potential(s, &lg.exponents).map_err(|e| e.to_string())?;
    let m = primitive_q(&to_q(&dualfan::ivec(bad)));
    let negative = s
        .rays()
        .iter()
        .any(|u| u.iter().zip(&m).map(|(a, b)| a * b).sum::<Int>().is_negative());
    if !negative || sp.ray_index(&m).is_some() {
        return Ok(false);
    }
    if is_regular_character(&m, s) {
        return Err(format!("{m:?} pairs negatively with a ray but is called regular"));
    }
    let mut rays = sp.rays().to_vec();
    rays.push(m.clone());
    let k = rays.len();
    let mut cones = sp.max_cones().to_vec();
    cones.push(vec![k - 1]);
    let broken = Fan::new(s.rank(), rays, cones).map_err(|e| e.to_string())?;
    if !validate_fan(&broken).valid {
        return Ok(false);
    }
    let f = is_dual_pair(s, &broken).map_err(|e| e.to_string())?;
    let b = is_dual_pair(&broken, s).map_err(|e| e.to_string())?;
    if f.verdict || b.verdict {
        return Err(format!("injected {m:?} kept the pair dual"));
    }
    if lg_from_dual_fans(s, &broken).is_ok() {
        return Err("LG model built from a non-dual pair".into());
    }
    Ok(true)
}

// ---------------------------------------------------------------- bundles

pub fn check_recover_round_trip(y: &Fan, coeffs: &[i64]) -> Result<(), String> {
    let d = ToricDivisor::from_i64(coeffs);
    let cd = is_cartier(y, &d).ok_or("smooth fan with a non-Cartier divisor")?;
    let f = split_bundle_fan(y, &[(d.clone(), cd)]).map_err(|e| e.to_string())?;
    if !validate_fan(&f).valid {
        return Err("bundle fan invalid".into());
    }
    let rec = recover_ci_data(&f, &[y.rays().len()]).ok_or("nothing recovered")?;
    if rec.base.canonical_form() != y.canonical_form() || rec.base.rays() != y.rays() {
        return Err(format!("base {:?} vs {:?}", rec.base.rays(), y.rays()));
    }
    if rec.divisors != vec![d] {
        return Err(format!("divisors {:?}", rec.divisors));
    }
    if !is_complete(&rec.base) {
        return Err("recovered base is incomplete".into());
    }
    Ok(())
}

// ---------------------------------------------------------------- groups

/// Order of the subgroup of `(Q/Z)^n` generated by the phases, by
/// breadth-first enumeration.
pub fn subgroup_order(phases: &[RatVec]) -> usize {
    let norm = |v: &RatVec| -> RatVec { v.iter().map(|x| x - x.floor()).collect() };
    let n = phases.first().map_or(0, |p| p.len());
    let zero: RatVec = vec![Rat::zero(); n];
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for g in phases {
            let y = norm(&x.iter().zip(g).map(|(a, b)| a + b).collect());
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

pub fn phase_sets() -> impl Strategy<Value = (usize, Vec<RatVec>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((prop::collection::vec(0i64..5, n), 1i64..=5), 0..=3).prop_map(|gs| {
                gs.into_iter()
                    .map(|(num, den)| num.into_iter().map(|a| Rat::new(a.into(), den.into())).collect())
                    .collect()
            }),
        )
    })
}
