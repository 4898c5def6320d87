//! Named matroid families: uniform, graphic, wheels and whirls, Θ_n and
//! Θ_n^-, L_8, the Fano plane, and circuit-hyperplane relaxation.
//!
//! Constructions attach element names (`w1`, `z3`, `x2`, `s1`, ...) so that
//! reports can refer to elements the way the literature does.

use crate::error::{Error, Result};
use crate::mask::{k_subsets_lex, SubsetMask};
use crate::matroid::Matroid;

/// Element indices of the segment (`w`) and cosegment (`z`) parts of Θ_n or Θ_n^-.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaLabels {
    pub w: Vec<usize>,
    pub z: Vec<usize>,
}

impl ThetaLabels {
    pub fn w_mask(&self) -> SubsetMask {
        self.w.iter().copied().collect()
    }

    pub fn z_mask(&self) -> SubsetMask {
        self.z.iter().copied().collect()
    }
}

pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::InvalidParameter(format!("U({r},{n}) needs r <= n")));
    }
    Ok(Matroid::from_bases(n, &k_subsets_lex(n, r))?.with_provenance(format!("U({r},{n})")))
}

/// Cycle matroid of a multigraph; an edge `(v, v)` is a loop.
pub fn graphic_from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
    let m = edges.len();
    if m > crate::mask::MAX_ELEMENTS {
        return Err(Error::TooManyElements(m));
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
        return Err(Error::InvalidParameter(format!(
            "edge ({u},{v}) uses a vertex outside 0..{vertex_count}"
        )));
    }
    let size = 1usize << m;
    let mut ranks = vec![0u8; size];
    let mut parent = vec![0usize; vertex_count];
    for (mask, slot) in ranks.iter_mut().enumerate().skip(1) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut forest = 0u8;
        for e in SubsetMask(mask as u32).iter() {
            let (a, b) = edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                forest += 1;
            }
        }
        *slot = forest;
    }
    Ok(Matroid::from_table_unchecked(m, ranks))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// M(K_4) with edges in the order 01, 02, 03, 12, 13, 23.
pub fn mk4() -> Matroid {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    graphic_from_edges(4, &edges)
        .expect("K4 has six edges")
        .with_provenance("M(K4)")
        .with_names(edges.iter().map(|(a, b)| format!("{a}{b}")).collect())
}

fn wheel_edges(r: usize) -> Vec<(usize, usize)> {
    // element 2i is spoke s_{i+1}, element 2i+1 is rim edge r_{i+1}
    let mut edges = Vec::with_capacity(2 * r);
    for i in 0..r {
        edges.push((0, i + 1));
        edges.push((i + 1, (i + 1) % r + 1));
    }
    edges
}

fn wheel_names(r: usize) -> Vec<String> {
    (1..=r).flat_map(|i| [format!("s{i}"), format!("r{i}")]).collect()
}

fn rim(r: usize) -> SubsetMask {
    (0..r).map(|i| 2 * i + 1).collect()
}

/// Cycle matroid of the wheel with `r` spokes; elements alternate spoke, rim.
pub fn wheel(r: usize) -> Result<Matroid> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("wheel needs at least 2 spokes, got {r}")));
    }
    Ok(graphic_from_edges(r + 1, &wheel_edges(r))?
        .with_provenance(format!("W({r})"))
        .with_names(wheel_names(r)))
}

/// The rank-`r` whirl: the wheel with its rim circuit-hyperplane relaxed.
pub fn whirl(r: usize) -> Result<Matroid> {
    let w = wheel(r)?;
    Ok(relax(&w, rim(r))?
        .with_provenance(format!("WHIRL({r})"))
        .with_names(wheel_names(r)))
}

/// Adds the circuit-hyperplane `h` to the bases.
pub fn relax(m: &Matroid, h: SubsetMask) -> Result<Matroid> {
    let is_hyperplane = m.is_flat(h) && m.rank(h) + 1 == m.full_rank();
    if !m.is_circuit(h) || !is_hyperplane {
        return Err(Error::NotCircuitHyperplane(h));
    }
    let mut bases = m.bases();
    bases.push(h);
    let mut out = Matroid::from_bases(m.size(), &bases)?;
    if let Some(names) = m.names() {
        out = out.with_names(names.to_vec());
    }
    Ok(out)
}

/// Circuit clauses of Θ_n with `w_i = i - 1` and `z_i = n + i - 1`.
pub fn theta_circuits(n: usize) -> Vec<SubsetMask> {
    let w = |i: usize| i;
    let z = |i: usize| n + i;
    let z_all: SubsetMask = (0..n).map(z).collect();
    let mut out = Vec::new();
    // all 3-element subsets of W
    out.extend(k_subsets_lex(n, 3));
    for i in 0..n {
        let base = z_all.without(z(i));
        out.push(base.with(w(i)));
        for j in 0..n {
            for k in j + 1..n {
                if i != j && i != k {
                    out.push(base.with(w(j)).with(w(k)));
                }
            }
        }
    }
    out
}

fn theta_names(n: usize, w_count: usize) -> Vec<String> {
    (1..=w_count)
        .map(|i| format!("w{i}"))
        .chain((1..=n).map(|i| format!("z{i}")))
        .collect()
}

pub fn theta(n: usize) -> Result<(Matroid, ThetaLabels)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("THETA needs n >= 2, got {n}")));
    }
    let m = Matroid::from_circuits(2 * n, &theta_circuits(n))?
        .with_provenance(format!("THETA({n})"))
        .with_names(theta_names(n, n));
    let labels = ThetaLabels {
        w: (0..n).collect(),
        z: (n..2 * n).collect(),
    };
    Ok((m, labels))
}

/// Θ_n with `w_n` deleted.
pub fn theta_minus(n: usize) -> Result<(Matroid, ThetaLabels)> {
    let (full, _) = theta(n)?;
    let (m, _) = full.minor(SubsetMask::EMPTY, SubsetMask::singleton(n - 1));
    let labels = ThetaLabels {
        w: (0..n - 1).collect(),
        z: (n - 1..2 * n - 1).collect(),
    };
    Ok((m.with_provenance(format!("THETA-({n})")), labels))
}

/// Simple rank-3 matroid on `n` points whose nontrivial lines are `lines`.
pub fn rank3_from_lines(n: usize, lines: &[SubsetMask]) -> Result<Matroid> {
    let collinear = |t: SubsetMask| lines.iter().any(|l| t.is_subset_of(*l));
    let mut circuits: Vec<SubsetMask> = k_subsets_lex(n, 3).into_iter().filter(|t| collinear(*t)).collect();
    for quad in k_subsets_lex(n, 4) {
        if quad.iter().all(|e| !collinear(quad.without(e))) {
            circuits.push(quad);
        }
    }
    Matroid::from_circuits(n, &circuits)
}

/// Element order of [`l8`]: `x1..x4`, `e`, `y1..y3`.
pub const L8_NAMES: [&str; 8] = ["x1", "x2", "x3", "x4", "e", "y1", "y2", "y3"];

/// The rank-3 matroid L_8.
///
/// Lines: `{x1,x2,x3,x4}` and `{x1,y1,y2,y3}` meet at `x1`; the point `e` is
/// the intersection of the lines `{x2,e,y2}` and `{x3,e,y1}`.
pub fn l8() -> Matroid {
    let idx = |name: &str| L8_NAMES.iter().position(|&s| s == name).expect("L8 label");
    let line = |names: &[&str]| names.iter().map(|s| idx(s)).collect::<SubsetMask>();
    let lines = [
        line(&["x1", "x2", "x3", "x4"]),
        line(&["x1", "y1", "y2", "y3"]),
        line(&["x2", "e", "y2"]),
        line(&["x3", "e", "y1"]),
    ];
    rank3_from_lines(8, &lines)
        .expect("L8 line configuration is a matroid")
        .with_provenance("L8")
        .with_names(L8_NAMES.iter().map(|s| s.to_string()).collect())
}

/// F_7 from the seven nonzero vectors of GF(2)^3; column `j` is the binary expansion of `j + 1`.
pub fn fano() -> Matroid {
    let rows: Vec<Vec<u32>> = (0..3)
        .map(|bit| (1..=7u32).map(|j| j >> bit & 1).collect())
        .collect();
    Matroid::from_linear_rep(2, &rows)
        .expect("binary representation")
        .with_provenance("F7")
}

/// F_7^-: the Fano plane with the line `{1, 2, 3}` (columns 2, 3, 4... as binary 2, 4, 6) relaxed.
pub fn non_fano() -> Matroid {
    let f = fano();
    let line = f
        .triangles()
        .into_iter()
        .next()
        .expect("the Fano plane has lines");
    relax(&f, line).expect("Fano lines are circuit-hyperplanes").with_provenance("F7-")
}

/// Projective geometry PG(r-1, p) on its (p^r - 1)/(p - 1) points.
pub fn projective_geometry(r: usize, p: u32) -> Result<Matroid> {
    let points = projective_points(r, p);
    if points.len() > crate::mask::MAX_ELEMENTS {
        return Err(Error::TooManyElements(points.len()));
    }
    let rows: Vec<Vec<u32>> = (0..r).map(|i| points.iter().map(|v| v[i]).collect()).collect();
    Ok(Matroid::from_linear_rep(p, &rows)?.with_provenance(format!("PG({},{p})", r as i64 - 1)))
}

/// Representatives of the 1-dimensional subspaces of GF(p)^r: the first
/// nonzero coordinate is 1. Ordered by the vector read as a base-p number.
pub fn projective_points(r: usize, p: u32) -> Vec<Vec<u32>> {
    let total = (p as usize).pow(r as u32);
    let mut out = Vec::new();
    for code in 1..total {
        let mut v = vec![0u32; r];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = (c % p as usize) as u32;
            c /= p as usize;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// A family described by a specification string.
///
/// Accepted forms (case-insensitive): `U(r,n)`, `MK4` / `M(K4)`, `F7`,
/// `F7-`, `L8`, `THETA(n)`, `THETA-(n)`, `W(r)` / `WHEEL(r)`, `WHIRL(r)`,
/// `PG(d,p)`.
pub fn family(spec: &str) -> Result<Matroid> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
    let bad = || Error::InvalidParameter(format!("unknown family `{spec}`"));
    let args = |prefix: &str| -> Option<Vec<usize>> {
        let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        inner.split(',').map(|a| a.parse().ok()).collect()
    };
    match s.as_str() {
        "MK4" | "M(K4)" | "K4" => return Ok(mk4()),
        "F7" | "FANO" => return Ok(fano()),
        "F7-" | "NONFANO" => return Ok(non_fano()),
        "L8" => return Ok(l8()),
        _ => {}
    }
    if let Some(a) = args("THETA-") {
        return match a[..] {
            [n] => Ok(theta_minus(n)?.0),
            _ => Err(bad()),
        };
    }
    if let Some(a) = args("THETA") {
        return match a[..] {
            [n] => Ok(theta(n)?.0),
            _ => Err(bad()),
        };
    }
    if let Some(a) = args("U") {
        return match a[..] {
            [r, n] => uniform(r, n),
            _ => Err(bad()),
        };
    }
    if let Some(a) = args("WHIRL") {
        return match a[..] {
            [r] => whirl(r),
            _ => Err(bad()),
        };
    }
    if let Some(a) = args("WHEEL").or_else(|| args("W")) {
        return match a[..] {
            [r] => wheel(r),
            _ => Err(bad()),
        };
    }
    if let Some(a) = args("PG") {
        return match a[..] {
            [d, p] => projective_geometry(d + 1, p as u32),
            _ => Err(bad()),
        };
    }
    Err(bad())
}
