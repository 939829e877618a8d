//! Standard shapes: representables, boundaries, spines, horns, and the
//! lower-triangle quotients used by the companionship extension theory.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::simplex;

use super::build::{quotient, rep_cells_where, representable, sub_presheaf};
use super::{Bidegree, BisimplicialMap, FinBisimplicialSet};

/// A shape description, parseable from a CLI string such as
/// `horn:S=1:T=:n=2:m=1` or `rep:n=1:m=1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeSpec {
    /// The representable `[n, m]`.
    Representable { n: usize, m: usize },
    /// The boundary of `[n, m]`: all pairs `(f, g)` with `f` or `g` not surjective.
    Boundary { n: usize, m: usize },
    /// The horizontal spine of `[n, m]`.
    SpineH { n: usize, m: usize },
    /// The vertical spine of `[n, m]`.
    SpineV { n: usize, m: usize },
    /// `Lambda^{S,T}[n, m]`.
    Horn { s: Vec<usize>, t: Vec<usize>, n: usize, m: usize },
    /// The free-living lower triangle `L`.
    LowerTriangle,
    /// The quotient `L[n, m]`.
    LQuotient { n: usize, m: usize },
    /// `Gamma^T_L[n, m] = Lambda^{empty, T}_L[n, m]`.
    GammaL { t: Vec<usize>, n: usize, m: usize },
}

impl ShapeSpec {
    pub fn parse(s: &str) -> Result<ShapeSpec> {
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or_default();
        let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
        for p in parts {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad shape parameter `{p}`")))?;
            kv.insert(k, v);
        }
        let num = |k: &str| -> Result<usize> {
            kv.get(k)
                .ok_or_else(|| Error::Parse(format!("missing parameter `{k}`")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad number for `{k}`")))
        };
        let set = |k: &str| -> Result<Vec<usize>> {
            let raw = kv.get(k).copied().unwrap_or("");
            if raw.is_empty() {
                return Ok(Vec::new());
            }
            raw.split(',')
                .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad set for `{k}`"))))
                .collect()
        };
        match kind {
            "rep" => Ok(ShapeSpec::Representable { n: num("n")?, m: num("m")? }),
            "boundary" => Ok(ShapeSpec::Boundary { n: num("n")?, m: num("m")? }),
            "spine-h" => Ok(ShapeSpec::SpineH { n: num("n")?, m: num("m")? }),
            "spine-v" => Ok(ShapeSpec::SpineV { n: num("n")?, m: num("m")? }),
            "horn" => Ok(ShapeSpec::Horn { s: set("S")?, t: set("T")?, n: num("n")?, m: num("m")? }),
            "lower-triangle" => Ok(ShapeSpec::LowerTriangle),
            "l-quotient" => Ok(ShapeSpec::LQuotient { n: num("n")?, m: num("m")? }),
            "gamma-l" => Ok(ShapeSpec::GammaL { t: set("T")?, n: num("n")?, m: num("m")? }),
            other => Err(Error::Parse(format!("unknown shape kind `{other}`"))),
        }
    }
}

impl std::fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let set = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            ShapeSpec::Representable { n, m } => write!(f, "rep:n={n}:m={m}"),
            ShapeSpec::Boundary { n, m } => write!(f, "boundary:n={n}:m={m}"),
            ShapeSpec::SpineH { n, m } => write!(f, "spine-h:n={n}:m={m}"),
            ShapeSpec::SpineV { n, m } => write!(f, "spine-v:n={n}:m={m}"),
            ShapeSpec::Horn { s, t, n, m } => {
                write!(f, "horn:S={}:T={}:n={n}:m={m}", set(s), set(t))
            }
            ShapeSpec::LowerTriangle => write!(f, "lower-triangle"),
            ShapeSpec::LQuotient { n, m } => write!(f, "l-quotient:n={n}:m={m}"),
            ShapeSpec::GammaL { t, n, m } => write!(f, "gamma-l:T={}:n={n}:m={m}", set(t)),
        }
    }
}

/// A built shape plus its canonical structure map, where applicable:
/// an inclusion into the ambient representable for sub-shapes, a quotient
/// projection from it for quotient shapes.
pub struct BuiltShape {
    pub shape: FinBisimplicialSet,
    pub canonical: Option<BisimplicialMap>,
}

/// Is the cell `(f, g)` of `[n,m]` inside the sub-presheaf collapsed by the
/// `L[n,m]` quotient: the top row together with the initial vertical edge.
fn in_l_collapse(f: &[usize], g: &[usize]) -> bool {
    let f_max = f.iter().max().copied().unwrap_or(0);
    let g_max = g.iter().max().copied().unwrap_or(0);
    g_max == 0 || (f_max == 0 && g_max <= 1)
}

fn in_horn_st(f: &[usize], g: &[usize], s: &[usize], t: &[usize], n: usize, m: usize) -> bool {
    simplex::in_horn(f, n, s) || simplex::in_horn(g, m, t)
}

/// Collapse the sub-presheaf `sel` of `x` to a point (levelwise quotient).
fn collapse(
    x: &FinBisimplicialSet,
    is_collapsed: impl Fn(Bidegree, &str) -> bool,
) -> Result<(FinBisimplicialSet, BisimplicialMap)> {
    let mut classes: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    for (lv, list) in x.levels() {
        // class 0: the collapsed point; others numbered 1.. per cell
        let mut next = 1;
        let mut part = Vec::with_capacity(list.len());
        let mut any_collapsed = false;
        for id in list {
            if is_collapsed(lv, id) {
                part.push(0);
                any_collapsed = true;
            } else {
                part.push(next);
                next += 1;
            }
        }
        if !any_collapsed {
            return Err(Error::InvalidShape(format!(
                "collapsed sub-presheaf has no cell at {lv}"
            )));
        }
        classes.insert(lv, part);
    }
    quotient(x, &classes)
}

/// Build a shape at the given truncation.
pub fn build_shape(spec: &ShapeSpec, truncation: Bidegree) -> Result<BuiltShape> {
    match spec {
        ShapeSpec::Representable { n, m } => {
            let shape = representable(*n, *m, truncation);
            Ok(BuiltShape { shape, canonical: None })
        }
        ShapeSpec::Boundary { n, m } => {
            let rep = representable(*n, *m, truncation);
            let keep = rep_cells_where(&rep, |f, g| {
                !surjective(f, *n) || !surjective(g, *m)
            });
            let (shape, incl) = sub_presheaf(&rep, &keep)?;
            Ok(BuiltShape { shape, canonical: Some(incl) })
        }
        ShapeSpec::SpineH { n, m } => {
            let rep = representable(*n, *m, truncation);
            let keep = rep_cells_where(&rep, |f, _| within_unit_interval(f, *n));
            let (shape, incl) = sub_presheaf(&rep, &keep)?;
            Ok(BuiltShape { shape, canonical: Some(incl) })
        }
        ShapeSpec::SpineV { n, m } => {
            let rep = representable(*n, *m, truncation);
            let keep = rep_cells_where(&rep, |_, g| within_unit_interval(g, *m));
            let (shape, incl) = sub_presheaf(&rep, &keep)?;
            Ok(BuiltShape { shape, canonical: Some(incl) })
        }
        ShapeSpec::Horn { s, t, n, m } => {
            if s.iter().any(|&i| i > *n) || t.iter().any(|&j| j > *m) {
                return Err(Error::InvalidShape(format!(
                    "horn subsets out of range: S={s:?} T={t:?} for [{n},{m}]"
                )));
            }
            let rep = representable(*n, *m, truncation);
            let keep = rep_cells_where(&rep, |f, g| in_horn_st(f, g, s, t, *n, *m));
            let (shape, incl) = sub_presheaf(&rep, &keep)?;
            Ok(BuiltShape { shape, canonical: Some(incl) })
        }
        ShapeSpec::LowerTriangle => build_shape(&ShapeSpec::LQuotient { n: 1, m: 1 }, truncation),
        ShapeSpec::LQuotient { n, m } => {
            if *n < 1 || *m < 1 {
                return Err(Error::InvalidShape("L[n,m] needs n, m >= 1".into()));
            }
            let rep = representable(*n, *m, truncation);
            let (shape, proj) = collapse(&rep, |_, id| {
                let (f, g) = super::build::parse_rep_cell(id);
                in_l_collapse(&f, &g)
            })?;
            Ok(BuiltShape { shape, canonical: Some(proj) })
        }
        ShapeSpec::GammaL { t, n, m } => {
            if *n < 1 || *m < 2 {
                return Err(Error::InvalidShape("Gamma^T_L[n,m] needs n >= 1, m >= 2".into()));
            }
            if t.iter().any(|&j| j + 1 > *m) {
                return Err(Error::InvalidShape("Gamma^T_L[n,m] needs T within [m-1]".into()));
            }
            let rep = representable(*n, *m, truncation);
            let keep = rep_cells_where(&rep, |f, g| in_horn_st(f, g, &[], t, *n, *m));
            let (horn, _) = sub_presheaf(&rep, &keep)?;
            let (shape, proj) = collapse(&horn, |_, id| {
                let (f, g) = super::build::parse_rep_cell(id);
                in_l_collapse(&f, &g)
            })?;
            Ok(BuiltShape { shape, canonical: Some(proj) })
        }
    }
}

fn surjective(f: &[usize], n: usize) -> bool {
    let mut present = vec![false; n + 1];
    for &v in f {
        present[v] = true;
    }
    present.into_iter().all(|x| x)
}

fn within_unit_interval(f: &[usize], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let lo = f.iter().min().copied().unwrap_or(0);
    let hi = f.iter().max().copied().unwrap_or(0);
    hi <= lo + 1
}

/// The canonical inclusion `Gamma^T_L[n,m] -> L[n,m]` (both quotients of
/// sub-presheaves of `[n,m]`, compared by representative names).
pub fn gamma_into_l_quotient(
    gamma: &FinBisimplicialSet,
    l: &FinBisimplicialSet,
) -> Result<BisimplicialMap> {
    let mut comps = BTreeMap::new();
    for (lv, list) in gamma.levels() {
        let mut v = Vec::with_capacity(list.len());
        for id in list {
            let idx = l
                .cell_index(lv, id)
                .ok_or_else(|| Error::InvalidStructure(format!("cell `{id}` not in L-quotient")))?;
            v.push(idx);
        }
        comps.insert(lv, v);
    }
    BisimplicialMap::new(gamma.clone(), l.clone(), comps)
}

/// The classifying map `L[n,m] -> X` of a cell at level `(n, m)` whose
/// restriction to the collapsed sub-presheaf is the iterated degeneracy of a
/// point. Fails if the cell does not satisfy that side condition.
pub fn l_quotient_classifying_map(
    x: &FinBisimplicialSet,
    level: Bidegree,
    c: usize,
    truncation: Bidegree,
) -> Result<BisimplicialMap> {
    let built = build_shape(&ShapeSpec::LQuotient { n: level.n, m: level.m }, truncation)?;
    let l = built.shape;
    let mut comps: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    for (lv, list) in l.levels() {
        let mut v = Vec::with_capacity(list.len());
        for id in list {
            let (f, g) = super::build::parse_rep_cell(id);
            let (tb, tc) = x.act(level, c, &f, &g);
            debug_assert_eq!(tb, lv);
            v.push(tc);
        }
        comps.insert(lv, v);
    }
    // representative independence is exactly naturality of the result
    BisimplicialMap::new(l, x.clone(), comps).map_err(|_| {
        Error::InvalidShape("cell does not factor through the L-quotient".into())
    })
}

/// Same as [`l_quotient_classifying_map`] but landing in `Gamma^T_L` shapes is
/// not needed; instead: restrict a classifying map `L[n,m] -> X` to the
/// sub-shape `Gamma^T_L[n,m]`.
pub fn restrict_to_gamma(
    l_map: &BisimplicialMap,
    gamma: &FinBisimplicialSet,
) -> Result<BisimplicialMap> {
    let incl = gamma_into_l_quotient(gamma, l_map.source())?;
    incl.then(l_map)
}

/// All horn specs `Lambda^{S,T}[n,m]` with non-convex complement, for
/// `1 <= n <= max_n`, `1 <= m <= max_m` (plus the degenerate rows `n=0`/`m=0`).
pub fn nonconvex_horns(max_n: usize, max_m: usize) -> Vec<ShapeSpec> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for m in 0..=max_m {
            if n == 0 && m == 0 {
                continue;
            }
            for s_mask in 0u32..(1 << (n + 1)) {
                let s: Vec<usize> = (0..=n).filter(|&i| s_mask & (1 << i) != 0).collect();
                let s_comp: Vec<usize> = (0..=n).filter(|&i| s_mask & (1 << i) == 0).collect();
                for t_mask in 0u32..(1 << (m + 1)) {
                    let t: Vec<usize> = (0..=m).filter(|&j| t_mask & (1 << j) != 0).collect();
                    let t_comp: Vec<usize> = (0..=m).filter(|&j| t_mask & (1 << j) == 0).collect();
                    if !simplex::is_convex(&s_comp) || !simplex::is_convex(&t_comp) {
                        out.push(ShapeSpec::Horn { s: s.clone(), t, n, m });
                    }
                }
            }
        }
    }
    out
}

