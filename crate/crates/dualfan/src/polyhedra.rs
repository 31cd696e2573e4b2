//! Rational polyhedral cones and polyhedra with both representations.
//!
//! Cones are built by the double description method: the dual cone of a
//! generator set is computed by inserting one halfspace at a time, in sorted
//! order, and the generators are recovered by running the same procedure on
//! the facet normals. Both sides are stored in canonical form (lineality
//! basis in Hermite form, ray representatives orthogonal to the lineality
//! space, primitive, sorted), so structural equality is set equality.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::fans::Fan;
use crate::lattice::{
    clear_denominators, dot, dot_rat, is_zero_vec, kernel_basis, lattice_basis, neg_vec,
    primitive, rank, scale_vec, sub_vec, to_rat_vec, LatticeMap,
};
use crate::{Error, Int, IntVec, Rat, RatVec, Result};

// ---------------------------------------------------------------------------
// double description

/// `{y : a . y >= 0 for all a}` as `(lineality basis, ray representatives)`.
fn double_description(dim: usize, constraints: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    let cons: Vec<IntVec> = constraints
        .iter()
        .filter(|a| !is_zero_vec(a))
        .map(|a| primitive(a))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut lin: Vec<IntVec> = (0..dim)
        .map(|i| (0..dim).map(|j| Int::from((i == j) as u8)).collect())
        .collect();
    let mut rays: Vec<IntVec> = Vec::new();
    // tight[r][i]: constraint i (among those inserted so far) vanishes on ray r
    let mut tight: Vec<Vec<bool>> = Vec::new();
    let mut done: Vec<IntVec> = Vec::new();

    for a in &cons {
        if let Some(idx) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.remove(idx);
            let mut s = dot(a, &l0);
            if s.is_negative() {
                l0 = neg_vec(&l0);
                s = -s;
            }
            for l in lin.iter_mut() {
                let t = dot(a, l);
                if !t.is_zero() {
                    *l = primitive(&sub_vec(&scale_vec(&s, l), &scale_vec(&t, &l0)));
                }
            }
            for (r, tr) in rays.iter_mut().zip(tight.iter_mut()) {
                let t = dot(a, r);
                if !t.is_zero() {
                    *r = primitive(&sub_vec(&scale_vec(&s, r), &scale_vec(&t, &l0)));
                }
                tr.push(true);
            }
            let mut t0 = vec![true; done.len()];
            t0.push(false);
            rays.push(l0);
            tight.push(t0);
        } else {
            let vals: Vec<Int> = rays.iter().map(|r| dot(a, r)).collect();
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
            let need = dim as isize - lin.len() as isize - 2;
            let mut new_rays = Vec::new();
            let mut new_tight = Vec::new();
            for &p in &pos {
                for &n in &neg {
                    let common: Vec<usize> = (0..done.len())
                        .filter(|&i| tight[p][i] && tight[n][i])
                        .collect();
                    if (common.len() as isize) < need {
                        continue;
                    }
                    let rows: Vec<IntVec> = common.iter().map(|&i| done[i].clone()).collect();
                    if rank(&rows) as isize != need {
                        continue;
                    }
                    let w = primitive(&sub_vec(
                        &scale_vec(&vals[p], &rays[n]),
                        &scale_vec(&vals[n], &rays[p]),
                    ));
                    let mut t: Vec<bool> = (0..done.len()).map(|i| tight[p][i] && tight[n][i]).collect();
                    t.push(true);
                    new_rays.push(w);
                    new_tight.push(t);
                }
            }
            let mut kept_rays = Vec::new();
            let mut kept_tight = Vec::new();
            for (i, (r, mut t)) in rays.into_iter().zip(tight).enumerate() {
                if vals[i].is_negative() {
                    continue;
                }
                t.push(vals[i].is_zero());
                kept_rays.push(r);
                kept_tight.push(t);
            }
            kept_rays.extend(new_rays);
            kept_tight.extend(new_tight);
            rays = kept_rays;
            tight = kept_tight;
        }
        done.push(a.clone());
    }
    (lin, rays)
}

/// Canonical form of `lin(L) + cone(R)`: saturated Hermite basis of the
/// lineality lattice and primitive ray representatives orthogonal to it.
fn canonicalize(dim: usize, lin: &[IntVec], rays: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    let lin_basis = if lin.is_empty() {
        Vec::new()
    } else {
        let perp = kernel_basis(&LatticeMap::from_rows(dim, lin.to_vec()).unwrap());
        let sat = kernel_basis(&LatticeMap::from_rows(dim, perp.columns()).unwrap());
        lattice_basis(dim, &sat.columns())
    };
    let mut out: BTreeSet<IntVec> = BTreeSet::new();
    for r in rays {
        let p = if lin_basis.is_empty() {
            primitive(r)
        } else {
            project_out(r, &lin_basis)
        };
        if !is_zero_vec(&p) {
            out.insert(p);
        }
    }
    (lin_basis, out.into_iter().collect())
}

/// Primitive integer vector along the orthogonal projection of `r` onto the
/// complement of `span(basis)`.
fn project_out(r: &[Int], basis: &[IntVec]) -> IntVec {
    let k = basis.len();
    // Gram system G c = B r
    let gram: Vec<IntVec> = (0..k)
        .map(|i| (0..k).map(|j| dot(&basis[i], &basis[j])).collect())
        .collect();
    let rhs: RatVec = basis.iter().map(|b| Rat::from_integer(dot(b, r))).collect();
    let g = LatticeMap::from_rows(k, gram).unwrap();
    let c = crate::lattice::solve_rational(&g, &rhs).expect("Gram matrix of a basis is invertible");
    let mut proj: RatVec = to_rat_vec(r);
    for (ci, b) in c.iter().zip(basis) {
        for (x, y) in proj.iter_mut().zip(b) {
            *x -= ci * Rat::from_integer(y.clone());
        }
    }
    let (_, w) = clear_denominators(&proj);
    primitive(&w)
}

// ---------------------------------------------------------------------------
// cones

/// Rational polyhedral cone `lin(L) + cone(R)` with its dual cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    rank: usize,
    lineality: Vec<IntVec>,
    rays: Vec<IntVec>,
    dual_lineality: Vec<IntVec>,
    dual_rays: Vec<IntVec>,
}

impl Cone {
    /// Cone spanned by the given generators (zero vectors are ignored).
    pub fn new(rank: usize, generators: &[IntVec]) -> Result<Cone> {
        check_dims(rank, generators)?;
        let (dl, dr) = double_description(rank, generators);
        let (dual_lineality, dual_rays) = canonicalize(rank, &dl, &dr);
        let mut normals = dual_rays.clone();
        for l in &dual_lineality {
            normals.push(l.clone());
            normals.push(neg_vec(l));
        }
        let (l, r) = double_description(rank, &normals);
        let (lineality, rays) = canonicalize(rank, &l, &r);
        Ok(Cone {
            rank,
            lineality,
            rays,
            dual_lineality,
            dual_rays,
        })
    }

    /// `{x : a . x >= 0 for every normal a}`.
    pub fn from_inequalities(rank: usize, normals: &[IntVec]) -> Result<Cone> {
        Ok(Cone::new(rank, normals)?.dual())
    }

    pub fn zero(rank: usize) -> Cone {
        Cone::new(rank, &[]).unwrap()
    }

    pub fn orthant(rank: usize) -> Cone {
        let gens: Vec<IntVec> = (0..rank).map(|i| unit(rank, i)).collect();
        Cone::new(rank, &gens).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical generators: `±` the lineality basis, then the ray
    /// representatives, sorted lexicographically.
    pub fn generators(&self) -> Vec<IntVec> {
        signed_union(&self.lineality, &self.rays)
    }

    /// Ray representatives of the pointed part.
    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality_basis(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn lineality_rank(&self) -> usize {
        self.lineality.len()
    }

    /// Canonical generators of the dual cone: inward facet normals plus
    /// `±` the equations of the linear span.
    pub fn facet_normals(&self) -> Vec<IntVec> {
        signed_union(&self.dual_lineality, &self.dual_rays)
    }

    /// Facet normals proper (one per facet), excluding the equations.
    pub fn facet_inequalities(&self) -> &[IntVec] {
        &self.dual_rays
    }

    /// Basis of the equations cutting out the linear span.
    pub fn equations(&self) -> &[IntVec] {
        &self.dual_lineality
    }

    pub fn dim(&self) -> usize {
        self.rank - self.dual_lineality.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dual_lineality.is_empty()
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.lineality.is_empty() && self.rays.is_empty()
    }

    pub fn dual(&self) -> Cone {
        Cone {
            rank: self.rank,
            lineality: self.dual_lineality.clone(),
            rays: self.dual_rays.clone(),
            dual_lineality: self.lineality.clone(),
            dual_rays: self.rays.clone(),
        }
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        x.len() == self.rank
            && self.dual_rays.iter().all(|a| !dot(a, x).is_negative())
            && self.dual_lineality.iter().all(|a| dot(a, x).is_zero())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// Interior of the cone relative to its span.
    pub fn relative_interior_contains(&self, x: &[Int]) -> bool {
        self.contains(x) && self.dual_rays.iter().all(|a| dot(a, x).is_positive())
    }

    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        if self.rank != other.rank {
            return Err(Error::Dimension("intersection of cones of different rank".into()));
        }
        let mut normals = self.facet_normals();
        normals.extend(other.facet_normals());
        Cone::from_inequalities(self.rank, &normals)
    }

    /// Whether `self` is a face of `other`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        if self.rank != other.rank || !other.contains_cone(self) {
            return false;
        }
        // smallest face of `other` containing `self`
        let gens = self.generators();
        let tight: Vec<&IntVec> = other
            .dual_rays
            .iter()
            .filter(|a| gens.iter().all(|g| dot(a, g).is_zero()))
            .collect();
        let face_gens: Vec<IntVec> = other
            .generators()
            .into_iter()
            .filter(|g| tight.iter().all(|a| dot(a, g).is_zero()))
            .collect();
        match Cone::new(self.rank, &face_gens) {
            Ok(f) => &f == self,
            Err(_) => false,
        }
    }

    /// Faces as sets of indices into [`Cone::rays`], with their dimensions.
    /// Only meaningful for strongly convex cones.
    pub fn face_ray_sets(&self) -> Result<Vec<(Vec<usize>, usize)>> {
        if !self.is_strongly_convex() {
            return Err(Error::HasLineality(self.lineality_rank()));
        }
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let facets: Vec<Vec<usize>> = self
            .dual_rays
            .iter()
            .map(|a| {
                all.iter()
                    .copied()
                    .filter(|&i| dot(a, &self.rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        faces.insert(all.clone());
        faces.insert(Vec::new());
        let mut frontier: Vec<Vec<usize>> = vec![all];
        while let Some(f) = frontier.pop() {
            for g in &facets {
                let h: Vec<usize> = f.iter().copied().filter(|i| g.contains(i)).collect();
                if faces.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        Ok(faces
            .into_iter()
            .map(|s| {
                let rows: Vec<IntVec> = s.iter().map(|&i| self.rays[i].clone()).collect();
                let d = rank(&rows);
                (s, d)
            })
            .collect())
    }

    pub fn is_simplicial(&self) -> bool {
        self.is_strongly_convex() && self.rays.len() == self.dim()
    }
}

fn unit(n: usize, i: usize) -> IntVec {
    (0..n).map(|j| Int::from((i == j) as u8)).collect()
}

fn signed_union(lin: &[IntVec], rays: &[IntVec]) -> Vec<IntVec> {
    let mut out: BTreeSet<IntVec> = rays.iter().cloned().collect();
    for l in lin {
        out.insert(l.clone());
        out.insert(neg_vec(l));
    }
    out.into_iter().collect()
}

fn check_dims(rank: usize, vs: &[IntVec]) -> Result<()> {
    if let Some(v) = vs.iter().find(|v| v.len() != rank) {
        return Err(Error::Dimension(format!(
            "vector of length {} in rank {rank}",
            v.len()
        )));
    }
    Ok(())
}

pub fn dual_cone(c: &Cone) -> Cone {
    c.dual()
}

pub fn is_strongly_convex(c: &Cone) -> bool {
    c.is_strongly_convex()
}

/// All `k`-dimensional faces of a strongly convex cone.
pub fn faces(c: &Cone, k: usize) -> Result<Vec<Cone>> {
    let sets = c.face_ray_sets()?;
    let mut out = Vec::new();
    for (s, d) in sets {
        if d == k {
            let gens: Vec<IntVec> = s.iter().map(|&i| c.rays()[i].clone()).collect();
            out.push(Cone::new(c.rank(), &gens)?);
        }
    }
    out.sort_by_key(|a| a.generators());
    Ok(out)
}

/// Primitive generator of a one-dimensional strongly convex cone.
pub fn ray_generator(c: &Cone) -> Result<IntVec> {
    if !c.is_strongly_convex() || c.dim() != 1 {
        return Err(Error::Dimension(format!(
            "ray_generator needs a strongly convex cone of dimension 1, got dimension {} with lineality {}",
            c.dim(),
            c.lineality_rank()
        )));
    }
    Ok(c.rays()[0].clone())
}

// ---------------------------------------------------------------------------
// polyhedra

/// Rational convex polyhedral set `{m : a . m + l >= 0}` with vertices,
/// recession rays and lineality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    rank: usize,
    vertices: Vec<RatVec>,
    hrep: Vec<(IntVec, Rat)>,
    recession_rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    dim: Option<usize>,
}

impl Polytope {
    fn from_homogenized(rank: usize, cone: &Cone) -> Polytope {
        let t = rank;
        let mut vertices: Vec<RatVec> = Vec::new();
        let mut rec = Vec::new();
        for r in cone.rays() {
            if r[t].is_positive() {
                let d = Rat::from_integer(r[t].clone());
                vertices.push(r[..t].iter().map(|x| Rat::from_integer(x.clone()) / &d).collect());
            } else {
                rec.push(r[..t].to_vec());
            }
        }
        vertices.sort();
        let lineality: Vec<IntVec> = cone.lineality_basis().iter().map(|l| l[..t].to_vec()).collect();
        if vertices.is_empty() {
            return Polytope {
                rank,
                vertices,
                hrep: Vec::new(),
                recession_rays: Vec::new(),
                lineality: Vec::new(),
                dim: None,
            };
        }
        let mut hrep: BTreeSet<(IntVec, Rat)> = BTreeSet::new();
        for a in cone.facet_inequalities() {
            if is_zero_vec(&a[..t]) {
                continue;
            }
            hrep.insert((a[..t].to_vec(), Rat::from_integer(a[t].clone())));
        }
        for e in cone.equations() {
            hrep.insert((e[..t].to_vec(), Rat::from_integer(e[t].clone())));
            let n = neg_vec(e);
            hrep.insert((n[..t].to_vec(), Rat::from_integer(n[t].clone())));
        }
        Polytope {
            rank,
            vertices,
            hrep: hrep.into_iter().collect(),
            recession_rays: rec,
            lineality,
            dim: Some(cone.dim() - 1),
        }
    }

    /// Convex hull of finitely many rational points.
    pub fn from_points(rank: usize, points: &[RatVec]) -> Result<Polytope> {
        if let Some(p) = points.iter().find(|p| p.len() != rank) {
            return Err(Error::Dimension(format!("point of length {} in rank {rank}", p.len())));
        }
        let gens: Vec<IntVec> = points
            .iter()
            .map(|p| {
                let (d, mut w) = clear_denominators(p);
                w.push(d);
                w
            })
            .collect();
        let cone = Cone::new(rank + 1, &gens)?;
        Ok(Self::from_homogenized(rank, &cone))
    }

    pub fn from_int_points(rank: usize, points: &[IntVec]) -> Result<Polytope> {
        let pts: Vec<RatVec> = points.iter().map(|p| to_rat_vec(p)).collect();
        Self::from_points(rank, &pts)
    }

    /// `{m : a . m + l >= 0}` for the given `(a, l)` pairs.
    pub fn from_hrep(rank: usize, hrep: &[(IntVec, Rat)]) -> Result<Polytope> {
        let mut normals = Vec::with_capacity(hrep.len() + 1);
        for (a, l) in hrep {
            if a.len() != rank {
                return Err(Error::Dimension(format!("normal of length {} in rank {rank}", a.len())));
            }
            let mut row: RatVec = to_rat_vec(a);
            row.push(l.clone());
            let (_, mut w) = clear_denominators(&row);
            w = primitive(&w);
            normals.push(w);
        }
        let mut t = vec![Int::zero(); rank + 1];
        t[rank] = Int::one();
        normals.push(t);
        let cone = Cone::from_inequalities(rank + 1, &normals)?;
        Ok(Self::from_homogenized(rank, &cone))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    /// Vertices as integer vectors, when all are integral.
    pub fn integral_vertices(&self) -> Option<Vec<IntVec>> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect()
    }

    pub fn hrep(&self) -> &[(IntVec, Rat)] {
        &self.hrep
    }

    pub fn recession_rays(&self) -> &[IntVec] {
        &self.recession_rays
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.recession_rays.is_empty() && self.lineality.is_empty()
    }

    /// Dimension of the affine span, `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == Some(self.rank)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        !self.is_empty()
            && x.len() == self.rank
            && self.hrep.iter().all(|(a, l)| !(dot_rat(a, x) + l).is_negative())
    }

    pub fn contains_int(&self, x: &[Int]) -> bool {
        self.contains(&to_rat_vec(x))
    }

    /// Facets (inequalities that are not part of an equation pair).
    pub fn facets(&self) -> Vec<(IntVec, Rat)> {
        self.hrep
            .iter()
            .filter(|(a, l)| {
                let na = neg_vec(a);
                let nl = -l.clone();
                !self.hrep.iter().any(|(b, m)| *b == na && *m == nl)
            })
            .cloned()
            .collect()
    }
}

/// Integer points of a bounded polyhedron, sorted lexicographically.
pub fn lattice_points(p: &Polytope) -> Result<Vec<IntVec>> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let n = p.rank();
    let lo: Vec<Int> = (0..n)
        .map(|i| p.vertices.iter().map(|v| v[i].ceil().to_integer()).min().unwrap())
        .collect();
    let hi: Vec<Int> = (0..n)
        .map(|i| p.vertices.iter().map(|v| v[i].floor().to_integer()).max().unwrap())
        .collect();
    let mut out = Vec::new();
    if lo.iter().zip(&hi).any(|(a, b)| a > b) {
        return Ok(out);
    }
    let mut x = lo.clone();
    loop {
        if p.contains_int(&x) {
            out.push(x.clone());
        }
        // odometer, last coordinate fastest keeps the output sorted
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if x[i] < hi[i] {
                x[i] += 1;
                for j in (i + 1)..n {
                    x[j] = lo[j].clone();
                }
                break;
            }
        }
        if n == 0 {
            return Ok(out);
        }
    }
}

/// `{n : <m, n> >= -1 for all m in p}`.
pub fn polar(p: &Polytope) -> Result<Polytope> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if !p.is_full_dimensional() || p.hrep().iter().any(|(_, l)| !l.is_positive()) {
        return Err(Error::PolarUndefined);
    }
    let hrep: Vec<(IntVec, Rat)> = p
        .vertices()
        .iter()
        .map(|v| {
            let (d, w) = clear_denominators(v);
            (w, Rat::from_integer(d))
        })
        .collect();
    Polytope::from_hrep(p.rank(), &hrep)
}

pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.rank() != q.rank() {
        return Err(Error::Dimension(format!(
            "Minkowski sum of polytopes in ranks {} and {}",
            p.rank(),
            q.rank()
        )));
    }
    if !p.is_bounded() || !q.is_bounded() {
        return Err(Error::Unbounded);
    }
    let mut pts = Vec::new();
    for v in p.vertices() {
        for w in q.vertices() {
            pts.push(v.iter().zip(w).map(|(a, b)| a + b).collect());
        }
    }
    Polytope::from_points(p.rank(), &pts)
}

/// Inner normal fan of a full-dimensional pointed polyhedron: rays are the
/// primitive facet normals and each vertex contributes the maximal cone of
/// the facets through it.
pub fn normal_fan(p: &Polytope) -> Result<Fan> {
    let dim = p.dim().unwrap_or(0);
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim, rank: p.rank() });
    }
    if !p.lineality.is_empty() {
        return Err(Error::Invalid("polyhedron has no vertices".into()));
    }
    let facets = p.facets();
    let rays: Vec<IntVec> = facets.iter().map(|(a, _)| primitive(a)).collect();
    let mut cones = Vec::new();
    for v in p.vertices() {
        let idx: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, (a, l))| (dot_rat(a, v) + l).is_zero())
            .map(|(i, _)| i)
            .collect();
        cones.push(idx);
    }
    Fan::new(p.rank(), rays, cones)
}

/// Whether two lists of integer points define the same convex hull.
pub fn same_hull(rank: usize, a: &[IntVec], b: &[IntVec]) -> Result<bool> {
    Ok(Polytope::from_int_points(rank, a)? == Polytope::from_int_points(rank, b)?)
}

pub fn lcm_of_denominators(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ivec, ivecs};

    fn cone(rank: usize, gens: &[&[i64]]) -> Cone {
        Cone::new(rank, &ivecs(gens)).unwrap()
    }

    #[test]
    fn dual_of_small_cones() {
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(c.dual(), cone(2, &[&[0, 1], &[2, -1]]));
        assert_eq!(c.dual().dual(), c);
        let o = Cone::orthant(2);
        assert_eq!(o.dual(), o);
        let z = Cone::zero(2);
        let d = z.dual();
        assert_eq!(d.lineality_rank(), 2);
        assert_eq!(d.generators(), ivecs(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]));
    }

    #[test]
    fn strong_convexity() {
        assert!(Cone::orthant(3).is_strongly_convex());
        assert!(!cone(2, &[&[1, 0], &[-1, 0]]).is_strongly_convex());
        assert!(!cone(2, &[&[1, 0], &[-1, 1], &[0, -1]]).is_strongly_convex());
    }

    #[test]
    fn face_counts() {
        let o = Cone::orthant(3);
        let counts: Vec<usize> = (0..=3).map(|k| faces(&o, k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 3, 1]);
        let tri = cone(3, &[&[-1, -1, 1], &[2, -1, 1], &[-1, 2, 1]]);
        let counts: Vec<usize> = (0..=3).map(|k| faces(&tri, k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 3, 1]);
        let line = cone(2, &[&[1, 0], &[-1, 0]]);
        assert!(matches!(faces(&line, 1), Err(Error::HasLineality(1))));
    }

    #[test]
    fn ray_generators() {
        assert_eq!(ray_generator(&cone(2, &[&[2, 4]])).unwrap(), ivec(&[1, 2]));
        assert_eq!(ray_generator(&cone(2, &[&[0, 7]])).unwrap(), ivec(&[0, 1]));
        assert_eq!(ray_generator(&cone(3, &[&[-3, 6, -9]])).unwrap(), ivec(&[-1, 2, -3]));
        assert!(ray_generator(&Cone::orthant(2)).is_err());
    }

    #[test]
    fn polytope_points_and_polar() {
        let sq = Polytope::from_int_points(2, &ivecs(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(lattice_points(&sq).unwrap().len(), 4);
        let tri = Polytope::from_int_points(2, &ivecs(&[&[-1, -1], &[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(lattice_points(&tri).unwrap().len(), 10);
        let pol = polar(&tri).unwrap();
        assert_eq!(pol.integral_vertices().unwrap(), ivecs(&[&[-1, -1], &[0, 1], &[1, 0]]));
        assert_eq!(polar(&pol).unwrap(), tri);
        let big = Polytope::from_int_points(2, &ivecs(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]])).unwrap();
        let diamond = polar(&big).unwrap();
        assert_eq!(diamond.integral_vertices().unwrap(), ivecs(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]));
        assert!(matches!(polar(&sq), Err(Error::PolarUndefined)));
    }

    #[test]
    fn minkowski() {
        let a = Polytope::from_int_points(2, &ivecs(&[&[-1, 0], &[1, 0]])).unwrap();
        let b = Polytope::from_int_points(2, &ivecs(&[&[0, -1], &[0, 1]])).unwrap();
        let s = minkowski_sum(&a, &b).unwrap();
        assert_eq!(s.integral_vertices().unwrap().len(), 4);
        let c = Polytope::from_int_points(3, &ivecs(&[&[0, 0, 0]])).unwrap();
        assert!(minkowski_sum(&a, &c).is_err());
    }

    #[test]
    fn hrep_and_unbounded() {
        let h = vec![(ivec(&[1, 0]), Rat::zero()), (ivec(&[0, 1]), Rat::zero())];
        let q = Polytope::from_hrep(2, &h).unwrap();
        assert!(!q.is_bounded());
        assert!(matches!(lattice_points(&q), Err(Error::Unbounded)));
    }
}
