//! Constructions of bisimplicial sets: representables, products, dualities,
//! subobjects, quotients, and pushouts.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::simplex::monotone_maps;

use super::{all_bidegrees, Bidegree, BisimplicialMap, Dir, Duality, FinBisimplicialSet};

fn digits(f: &[usize]) -> String {
    f.iter().map(|v| char::from_digit(*v as u32, 16).unwrap()).collect()
}

fn parse_digits(s: &str) -> Vec<usize> {
    s.chars().map(|c| c.to_digit(16).unwrap() as usize).collect()
}

/// Cell id of the representable `[p,q]`: the two value lists, base-16 digits,
/// joined by `:`.
pub(crate) fn rep_cell_id(f: &[usize], g: &[usize]) -> String {
    format!("{}:{}", digits(f), digits(g))
}

pub(crate) fn parse_rep_cell(id: &str) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = id.split_once(':').expect("representable cell id");
    (parse_digits(a), parse_digits(b))
}

/// The representable presheaf on `(p, q)`, truncated at `truncation`.
/// Level `(a, b)` is the set of pairs of monotone maps `[a] -> [p]`, `[b] -> [q]`;
/// structure maps are precomposition.
pub fn representable(p: usize, q: usize, truncation: Bidegree) -> FinBisimplicialSet {
    assert!(p < 16 && q < 16, "representable indices must stay below 16");
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(truncation) {
        let mut list = Vec::new();
        for f in monotone_maps(lv.n, p) {
            for g in monotone_maps(lv.m, q) {
                list.push(rep_cell_id(&f, &g));
            }
        }
        cells.insert(lv, list);
    }
    FinBisimplicialSet::from_cells(truncation, cells, |dir, face, i, _b, id| {
        let (mut f, mut g) = parse_rep_cell(id);
        match (dir, face) {
            (Dir::Horizontal, true) => {
                f.remove(i);
            }
            (Dir::Horizontal, false) => {
                let v = f[i];
                f.insert(i, v);
            }
            (Dir::Vertical, true) => {
                g.remove(i);
            }
            (Dir::Vertical, false) => {
                let v = g[i];
                g.insert(i, v);
            }
        }
        rep_cell_id(&f, &g)
    })
    .expect("representable structure maps are total")
}

/// Levelwise product, with componentwise structure maps.
pub fn product(x: &FinBisimplicialSet, y: &FinBisimplicialSet) -> Result<FinBisimplicialSet> {
    if x.truncation() != y.truncation() {
        return Err(Error::TruncationMismatch(x.truncation(), y.truncation()));
    }
    let trunc = x.truncation();
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let mut list = Vec::new();
        for a in x.level(lv) {
            for b in y.level(lv) {
                list.push(format!("{a}&{b}"));
            }
        }
        cells.insert(lv, list);
    }
    FinBisimplicialSet::from_cells(trunc, cells, |dir, face, i, b, id| {
        let (a, c) = id.split_once('&').expect("product cell id");
        let ia = x.cell_index(b, a).unwrap();
        let ic = y.cell_index(b, c).unwrap();
        let tb = match (dir, face) {
            (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
            (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
            (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
            (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
        };
        let na = x.apply(dir, face, i, b, ia);
        let nc = y.apply(dir, face, i, b, ic);
        format!("{}&{}", x.cell_id(tb, na), y.cell_id(tb, nc))
    })
}

/// Projections out of a product built by [`product`].
pub fn product_projections(
    p: &FinBisimplicialSet,
    x: &FinBisimplicialSet,
    y: &FinBisimplicialSet,
) -> (BisimplicialMap, BisimplicialMap) {
    let mut comps_x = BTreeMap::new();
    let mut comps_y = BTreeMap::new();
    for (lv, list) in p.levels() {
        let mut cx = Vec::with_capacity(list.len());
        let mut cy = Vec::with_capacity(list.len());
        for id in list {
            let (a, c) = id.split_once('&').unwrap();
            cx.push(x.cell_index(lv, a).unwrap());
            cy.push(y.cell_index(lv, c).unwrap());
        }
        comps_x.insert(lv, cx);
        comps_y.insert(lv, cy);
    }
    (
        BisimplicialMap::new_unchecked(p.clone(), x.clone(), comps_x),
        BisimplicialMap::new_unchecked(p.clone(), y.clone(), comps_y),
    )
}

/// Apply one of the three dualities. `Transpose` swaps the truncation.
pub fn dualize(x: &FinBisimplicialSet, which: Duality) -> FinBisimplicialSet {
    let trunc = match which {
        Duality::Transpose => x.truncation().transpose(),
        _ => x.truncation(),
    };
    let src_level = |b: Bidegree| -> Bidegree {
        match which {
            Duality::Transpose => b.transpose(),
            _ => b,
        }
    };
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        cells.insert(lv, x.level(src_level(lv)).to_vec());
    }
    FinBisimplicialSet::from_cells(trunc, cells, |dir, face, i, b, id| {
        let sb = src_level(b);
        let c = x.cell_index(sb, id).unwrap();
        let (sdir, si) = match which {
            Duality::Transpose => {
                let sdir = match dir {
                    Dir::Horizontal => Dir::Vertical,
                    Dir::Vertical => Dir::Horizontal,
                };
                (sdir, i)
            }
            Duality::Hop => match dir {
                Dir::Horizontal => (Dir::Horizontal, sb.n - i),
                Dir::Vertical => (Dir::Vertical, i),
            },
            Duality::Vop => match dir {
                Dir::Horizontal => (Dir::Horizontal, i),
                Dir::Vertical => (Dir::Vertical, sb.m - i),
            },
        };
        let nc = x.apply(sdir, face, si, sb, c);
        let tb = match (sdir, face) {
            (Dir::Horizontal, true) => Bidegree::new(sb.n - 1, sb.m),
            (Dir::Horizontal, false) => Bidegree::new(sb.n + 1, sb.m),
            (Dir::Vertical, true) => Bidegree::new(sb.n, sb.m - 1),
            (Dir::Vertical, false) => Bidegree::new(sb.n, sb.m + 1),
        };
        x.cell_id(tb, nc).to_string()
    })
    .expect("duality reindexing is total")
}

/// Dualize a map levelwise.
pub fn dualize_map(f: &BisimplicialMap, which: Duality) -> BisimplicialMap {
    let src = dualize(f.source(), which);
    let tgt = dualize(f.target(), which);
    let mut comps = BTreeMap::new();
    for (lv, _) in src.levels() {
        let slv = match which {
            Duality::Transpose => lv.transpose(),
            _ => lv,
        };
        let mut v = Vec::with_capacity(src.level_size(lv));
        for id in src.level(lv) {
            let c = f.source().cell_index(slv, id).unwrap();
            let fc = f.component(slv, c);
            let tid = f.target().cell_id(slv, fc);
            v.push(tgt.cell_index(lv, tid).unwrap());
        }
        comps.insert(lv, v);
    }
    BisimplicialMap::new_unchecked(src, tgt, comps)
}

/// A sub-presheaf, presented by the kept cells per level. Fails if the
/// selection is not closed under the structure maps.
pub fn sub_presheaf(
    x: &FinBisimplicialSet,
    keep: &BTreeMap<Bidegree, Vec<usize>>,
) -> Result<(FinBisimplicialSet, BisimplicialMap)> {
    let trunc = x.truncation();
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let list = keep
            .get(&lv)
            .map(|v| v.iter().map(|&c| x.cell_id(lv, c).to_string()).collect())
            .unwrap_or_default();
        cells.insert(lv, list);
    }
    // closure check happens implicitly: from_cells fails if an op leaves the selection
    let sub = FinBisimplicialSet::from_cells(trunc, cells, |dir, face, i, b, id| {
        let c = x.cell_index(b, id).unwrap();
        let nc = x.apply(dir, face, i, b, c);
        let tb = match (dir, face) {
            (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
            (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
            (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
            (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
        };
        x.cell_id(tb, nc).to_string()
    })?;
    let mut comps = BTreeMap::new();
    for (lv, list) in sub.levels() {
        let v: Vec<usize> = list.iter().map(|id| x.cell_index(lv, id).unwrap()).collect();
        comps.insert(lv, v);
    }
    let incl = BisimplicialMap::new_unchecked(sub.clone(), x.clone(), comps);
    Ok((sub, incl))
}

/// The smallest sub-presheaf containing the given seed cells: closure under
/// all faces and (in-range) degeneracies.
pub fn spanned_sub_presheaf(
    x: &FinBisimplicialSet,
    seeds: &[(Bidegree, usize)],
) -> Result<(FinBisimplicialSet, BisimplicialMap)> {
    let mut keep: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    let mut stack: Vec<(Bidegree, usize)> = seeds.to_vec();
    let mut seen: std::collections::BTreeSet<(Bidegree, usize)> = stack.iter().cloned().collect();
    while let Some((b, c)) = stack.pop() {
        keep.entry(b).or_default().push(c);
        for (dir, face, i) in x.ops_from(b) {
            let nc = x.apply(dir, face, i, b, c);
            let tb = match (dir, face) {
                (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
                (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
                (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
                (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
            };
            if seen.insert((tb, nc)) {
                stack.push((tb, nc));
            }
        }
    }
    for v in keep.values_mut() {
        v.sort();
        v.dedup();
    }
    sub_presheaf(x, &keep)
}

/// Levelwise quotient by the partition `classes[level][cell] = class index`.
/// Fails unless the partition is a congruence for all structure maps.
/// Class names: the lexicographically smallest member id.
pub fn quotient(
    x: &FinBisimplicialSet,
    classes: &BTreeMap<Bidegree, Vec<usize>>,
) -> Result<(FinBisimplicialSet, BisimplicialMap)> {
    let trunc = x.truncation();
    // representative id per class
    let mut class_name: BTreeMap<(Bidegree, usize), String> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let part = classes
            .get(&lv)
            .ok_or_else(|| Error::InvalidStructure(format!("missing partition at {lv}")))?;
        if part.len() != x.level_size(lv) {
            return Err(Error::InvalidStructure(format!("partition size mismatch at {lv}")));
        }
        for (c, &cls) in part.iter().enumerate() {
            let id = x.cell_id(lv, c);
            class_name
                .entry((lv, cls))
                .and_modify(|cur| {
                    if id < cur.as_str() {
                        *cur = id.to_string();
                    }
                })
                .or_insert_with(|| id.to_string());
        }
    }
    // congruence check
    for lv in all_bidegrees(trunc) {
        let part = &classes[&lv];
        for (dir, face, i) in x.ops_from(lv) {
            let tb = match (dir, face) {
                (Dir::Horizontal, true) => Bidegree::new(lv.n - 1, lv.m),
                (Dir::Horizontal, false) => Bidegree::new(lv.n + 1, lv.m),
                (Dir::Vertical, true) => Bidegree::new(lv.n, lv.m - 1),
                (Dir::Vertical, false) => Bidegree::new(lv.n, lv.m + 1),
            };
            let tpart = &classes[&tb];
            let mut img: BTreeMap<usize, usize> = BTreeMap::new();
            for c in 0..x.level_size(lv) {
                let tcls = tpart[x.apply(dir, face, i, lv, c)];
                match img.entry(part[c]) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(tcls);
                    }
                    std::collections::btree_map::Entry::Occupied(e) => {
                        if *e.get() != tcls {
                            return Err(Error::InvalidStructure(format!(
                                "partition is not a congruence at {lv}"
                            )));
                        }
                    }
                }
            }
        }
    }
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let part = &classes[&lv];
        let mut names: Vec<String> = part.iter().map(|&cls| class_name[&(lv, cls)].clone()).collect();
        names.sort();
        names.dedup();
        cells.insert(lv, names);
    }
    // name -> class lookup per level for op computation
    let mut name_of: BTreeMap<Bidegree, BTreeMap<String, usize>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let part = &classes[&lv];
        let mut m = BTreeMap::new();
        for c in 0..x.level_size(lv) {
            m.insert(x.cell_id(lv, c).to_string(), part[c]);
        }
        name_of.insert(lv, m);
    }
    let q = FinBisimplicialSet::from_cells(trunc, cells, |dir, face, i, b, id| {
        // id is a representative member; push it through x and rename
        let c = x.cell_index(b, id).unwrap();
        let nc = x.apply(dir, face, i, b, c);
        let tb = match (dir, face) {
            (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
            (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
            (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
            (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
        };
        let cls = name_of[&tb][x.cell_id(tb, nc)];
        class_name[&(tb, cls)].clone()
    })?;
    let mut comps = BTreeMap::new();
    for (lv, _) in x.levels() {
        let part = &classes[&lv];
        let v: Vec<usize> = (0..x.level_size(lv))
            .map(|c| q.cell_index(lv, &class_name[&(lv, part[c])]).unwrap())
            .collect();
        comps.insert(lv, v);
    }
    let proj = BisimplicialMap::new_unchecked(x.clone(), q.clone(), comps);
    Ok((q, proj))
}

/// Pushout of `B <-f- A -g-> C`, computed levelwise. Returns the pushout with
/// its two cocone maps. Cell names: `l:<id>` / `r:<id>` tagged classes, named
/// by their smallest member.
pub fn pushout(
    f: &BisimplicialMap,
    g: &BisimplicialMap,
) -> Result<(FinBisimplicialSet, BisimplicialMap, BisimplicialMap)> {
    if f.source() != g.source() {
        return Err(Error::InvalidStructure("pushout legs must share their source".into()));
    }
    if f.target().truncation() != g.target().truncation() {
        return Err(Error::TruncationMismatch(f.target().truncation(), g.target().truncation()));
    }
    let b = f.target();
    let c = g.target();
    let trunc = b.truncation();
    // union-find over tagged disjoint union, per level
    let mut classes_b: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    let mut classes_c: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    let mut names: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let nb = b.level_size(lv);
        let nc = c.level_size(lv);
        let mut uf: Vec<usize> = (0..nb + nc).collect();
        fn find(uf: &mut Vec<usize>, i: usize) -> usize {
            let mut r = i;
            while uf[r] != r {
                r = uf[r];
            }
            let mut cur = i;
            while uf[cur] != r {
                let nxt = uf[cur];
                uf[cur] = r;
                cur = nxt;
            }
            r
        }
        for a in 0..f.source().level_size(lv) {
            let ib = f.component(lv, a);
            let ic = g.component(lv, a) + nb;
            let (ra, rb) = (find(&mut uf, ib), find(&mut uf, ic));
            if ra != rb {
                uf[ra] = rb;
            }
        }
        // canonical class numbering and names
        let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut name_of_class: Vec<String> = Vec::new();
        let mut cls_b = Vec::with_capacity(nb);
        let mut cls_c = Vec::with_capacity(nc);
        let tagged_name = |i: usize| -> String {
            if i < nb {
                format!("l:{}", b.cell_id(lv, i))
            } else {
                format!("r:{}", c.cell_id(lv, i - nb))
            }
        };
        for i in 0..nb + nc {
            let r = find(&mut uf, i);
            let cls = *class_of_root.entry(r).or_insert_with(|| {
                name_of_class.push(tagged_name(i));
                name_of_class.len() - 1
            });
            let nm = tagged_name(i);
            if nm < name_of_class[cls] {
                name_of_class[cls] = nm;
            }
            if i < nb {
                cls_b.push(cls);
            } else {
                cls_c.push(cls);
            }
        }
        classes_b.insert(lv, cls_b);
        classes_c.insert(lv, cls_c);
        names.insert(lv, name_of_class);
    }
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let mut list = names[&lv].clone();
        list.sort();
        list.dedup();
        cells.insert(lv, list);
    }
    // class name per (side, level, cell)
    let name_b = |lv: Bidegree, i: usize| -> &str { &names[&lv][classes_b[&lv][i]] };
    let name_c = |lv: Bidegree, i: usize| -> &str { &names[&lv][classes_c[&lv][i]] };
    // structure maps: ops are induced; pick any representative
    let p = FinBisimplicialSet::from_cells(trunc, cells, |dir, face, i, lv, id| {
        let tb = match (dir, face) {
            (Dir::Horizontal, true) => Bidegree::new(lv.n - 1, lv.m),
            (Dir::Horizontal, false) => Bidegree::new(lv.n + 1, lv.m),
            (Dir::Vertical, true) => Bidegree::new(lv.n, lv.m - 1),
            (Dir::Vertical, false) => Bidegree::new(lv.n, lv.m + 1),
        };
        let (side, raw) = id.split_at(2);
        match side {
            "l:" => {
                let cidx = b.cell_index(lv, raw).unwrap();
                let nc = b.apply(dir, face, i, lv, cidx);
                name_b(tb, nc).to_string()
            }
            _ => {
                let cidx = c.cell_index(lv, raw).unwrap();
                let nc = c.apply(dir, face, i, lv, cidx);
                name_c(tb, nc).to_string()
            }
        }
    })?;
    // well-definedness: check the other representatives agree
    for lv in all_bidegrees(trunc) {
        for (dir, face, i) in b.ops_from(lv) {
            let tb = match (dir, face) {
                (Dir::Horizontal, true) => Bidegree::new(lv.n - 1, lv.m),
                (Dir::Horizontal, false) => Bidegree::new(lv.n + 1, lv.m),
                (Dir::Vertical, true) => Bidegree::new(lv.n, lv.m - 1),
                (Dir::Vertical, false) => Bidegree::new(lv.n, lv.m + 1),
            };
            let mut image: BTreeMap<&str, &str> = BTreeMap::new();
            for cidx in 0..b.level_size(lv) {
                let cls = name_b(lv, cidx);
                let img = name_b(tb, b.apply(dir, face, i, lv, cidx));
                if let Some(prev) = image.insert(cls, img) {
                    if prev != img {
                        return Err(Error::InvalidStructure("pushout op not well-defined".into()));
                    }
                }
            }
            for cidx in 0..c.level_size(lv) {
                let cls = name_c(lv, cidx);
                let img = name_c(tb, c.apply(dir, face, i, lv, cidx));
                if let Some(prev) = image.insert(cls, img) {
                    if prev != img {
                        return Err(Error::InvalidStructure("pushout op not well-defined".into()));
                    }
                }
            }
        }
    }
    let mut comps_b = BTreeMap::new();
    let mut comps_c = BTreeMap::new();
    for lv in all_bidegrees(trunc) {
        let vb: Vec<usize> =
            (0..b.level_size(lv)).map(|i| p.cell_index(lv, name_b(lv, i)).unwrap()).collect();
        let vc: Vec<usize> =
            (0..c.level_size(lv)).map(|i| p.cell_index(lv, name_c(lv, i)).unwrap()).collect();
        comps_b.insert(lv, vb);
        comps_c.insert(lv, vc);
    }
    let inb = BisimplicialMap::new_unchecked(b.clone(), p.clone(), comps_b);
    let inc = BisimplicialMap::new_unchecked(c.clone(), p.clone(), comps_c);
    Ok((p, inb, inc))
}

/// Restrict to a smaller truncation (drop the levels above it).
pub fn truncate(x: &FinBisimplicialSet, truncation: Bidegree) -> Result<FinBisimplicialSet> {
    if !truncation.leq(&x.truncation()) {
        return Err(Error::TruncationMismatch(truncation, x.truncation()));
    }
    let mut cells: BTreeMap<Bidegree, Vec<String>> = BTreeMap::new();
    for lv in all_bidegrees(truncation) {
        cells.insert(lv, x.level(lv).to_vec());
    }
    FinBisimplicialSet::from_cells(truncation, cells, |dir, face, i, b, id| {
        let c = x.cell_index(b, id).unwrap();
        let nc = x.apply(dir, face, i, b, c);
        let tb = match (dir, face) {
            (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
            (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
            (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
            (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
        };
        x.cell_id(tb, nc).to_string()
    })
}

/// The Yoneda map `[p,q] -> X` classifying the cell `c` at level `(p, q)`:
/// level `(a,b)` sends `(f, g)` to `X(f,g)(c)`.
pub fn classifying_map(
    x: &FinBisimplicialSet,
    level: Bidegree,
    c: usize,
    truncation: Bidegree,
) -> BisimplicialMap {
    let rep = representable(level.n, level.m, truncation);
    let mut comps = BTreeMap::new();
    for (lv, list) in rep.levels() {
        let mut v = Vec::with_capacity(list.len());
        for id in list {
            let (f, g) = parse_rep_cell(id);
            let (tb, tc) = x.act(level, c, &f, &g);
            debug_assert_eq!(tb, lv);
            v.push(tc);
        }
        comps.insert(lv, v);
    }
    BisimplicialMap::new_unchecked(rep, x.clone(), comps)
}

/// Union of sub-presheaves (given as inclusion maps into a common ambient
/// object); returns the kept-cell sets in the ambient object.
pub fn union_cells(parts: &[&BisimplicialMap]) -> BTreeMap<Bidegree, Vec<usize>> {
    let mut keep: BTreeMap<Bidegree, std::collections::BTreeSet<usize>> = BTreeMap::new();
    for part in parts {
        for (lv, _) in part.source().levels() {
            let entry = keep.entry(lv).or_default();
            for c in 0..part.source().level_size(lv) {
                entry.insert(part.component(lv, c));
            }
        }
    }
    keep.into_iter().map(|(lv, s)| (lv, s.into_iter().collect())).collect()
}

/// Convenience: is `sub` (given by an inclusion into `x`) equal to all of `x`?
pub fn is_all_of(x: &FinBisimplicialSet, incl: &BisimplicialMap) -> bool {
    incl.source()
        .levels()
        .all(|(lv, list)| list.len() == x.level_size(lv))
}

pub(crate) fn op_target(dir: Dir, face: bool, b: Bidegree) -> Bidegree {
    match (dir, face) {
        (Dir::Horizontal, true) => Bidegree::new(b.n - 1, b.m),
        (Dir::Horizontal, false) => Bidegree::new(b.n + 1, b.m),
        (Dir::Vertical, true) => Bidegree::new(b.n, b.m - 1),
        (Dir::Vertical, false) => Bidegree::new(b.n, b.m + 1),
    }
}

/// Does the monotone-pair cell of a representable `[p,q]` lie in the
/// sub-presheaf cut out by `pred` on value sets? Used by the shape builders.
pub(crate) fn rep_cells_where(
    rep: &FinBisimplicialSet,
    mut pred: impl FnMut(&[usize], &[usize]) -> bool,
) -> BTreeMap<Bidegree, Vec<usize>> {
    let mut keep: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
    for (lv, list) in rep.levels() {
        let mut v = Vec::new();
        for (c, id) in list.iter().enumerate() {
            let (f, g) = parse_rep_cell(id);
            if pred(&f, &g) {
                v.push(c);
            }
        }
        keep.insert(lv, v);
    }
    keep
}

