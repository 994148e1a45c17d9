//! Recognition of finite irreducible Coxeter diagrams.
//!
//! A Coxeter group is finite exactly when every connected component of its
//! diagram is one of `A_n`, `B_n`, `D_n`, `E_6..8`, `F_4`, `H_3`, `H_4` or
//! `I_2(m)`, so the table below decides finiteness outright.

use std::fmt;

use serde::Serialize;

use super::matrix::CoxeterMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) => n,
            FiniteType::E(n) | FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => (1u128 << n) * fact(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * fact(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(_) => 696_729_600,
            FiniteType::F4 => 1_152,
            FiniteType::H(3) => 120,
            FiniteType::H(_) => 14_400,
            FiniteType::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A recognised component together with the position each generator takes
/// in the standard labelling of its type: `labelling[k]` is the (0-based)
/// generator of the input matrix that plays the role of standard generator
/// `k`.
///
/// Standard labellings: `A_n` is the path; `B_n` starts at the end carrying
/// the 4; `D_n` lists the two short fork ends, then the branch node, then the
/// long arm outwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognised {
    pub kind: FiniteType,
    pub labelling: Vec<usize>,
}

/// Connected components of the diagram restricted to `subset`, each sorted,
/// ordered by their smallest generator.
pub fn components(matrix: &CoxeterMatrix, subset: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; matrix.rank()];
    let in_subset = {
        let mut v = vec![false; matrix.rank()];
        for &s in subset {
            v[s] = true;
        }
        v
    };
    let mut sorted: Vec<usize> = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    for &start in &sorted {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..matrix.rank() {
                if in_subset[j] && !seen[j] && matrix.joined(i, j) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Classifies one connected component; `None` means the component generates
/// an infinite group.
pub fn classify_component(matrix: &CoxeterMatrix, comp: &[usize]) -> Option<Recognised> {
    let k = comp.len();
    let neighbours = |i: usize| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&j| matrix.joined(i, j))
            .collect()
    };
    let bond = |i: usize, j: usize| matrix.raw(i, j);

    match k {
        0 => None,
        1 => Some(Recognised {
            kind: FiniteType::A(1),
            labelling: comp.to_vec(),
        }),
        2 => {
            let (a, b) = (comp[0], comp[1]);
            let kind = match bond(a, b) {
                0 => return None,
                3 => FiniteType::A(2),
                4 => FiniteType::B(2),
                m => FiniteType::I2(m),
            };
            Some(Recognised {
                kind,
                labelling: vec![a, b],
            })
        }
        _ => {
            let edges: usize = comp.iter().map(|&i| neighbours(i).len()).sum::<usize>() / 2;
            if edges != k - 1 {
                return None;
            }
            let degrees: Vec<usize> = comp.iter().map(|&i| neighbours(i).len()).collect();
            let max_degree = *degrees.iter().max().unwrap();
            if max_degree <= 2 {
                classify_path(matrix, comp, &neighbours)
            } else if max_degree == 3 && degrees.iter().filter(|&&d| d == 3).count() == 1 {
                classify_fork(matrix, comp, &neighbours)
            } else {
                None
            }
        }
    }
}

fn walk_arm(start: usize, from: usize, neighbours: &dyn Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut arm = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&j| j != prev).collect();
        match next.as_slice() {
            [n] => {
                arm.push(*n);
                prev = cur;
                cur = *n;
            }
            _ => return arm,
        }
    }
}

fn classify_path(
    matrix: &CoxeterMatrix,
    comp: &[usize],
    neighbours: &dyn Fn(usize) -> Vec<usize>,
) -> Option<Recognised> {
    let ends: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&i| neighbours(i).len() == 1)
        .collect();
    // comp is sorted, so ends[0] is the end with the smaller index
    let mut path = walk_arm(ends[0], usize::MAX, neighbours);
    let labels =
        |p: &[usize]| -> Vec<u32> { p.windows(2).map(|w| matrix.raw(w[0], w[1])).collect() };
    let mut bonds = labels(&path);
    let k = comp.len();

    if bonds.iter().all(|&m| m == 3) {
        return Some(Recognised {
            kind: FiniteType::A(k),
            labelling: path,
        });
    }
    // put the exceptional bond first if it sits at the far end
    if bonds.first() == Some(&3) && bonds.last() != Some(&3) {
        path.reverse();
        bonds = labels(&path);
    }
    let rest_simple = bonds[1..].iter().all(|&m| m == 3);
    let kind = match (bonds[0], rest_simple, k) {
        (4, true, _) => FiniteType::B(k),
        (5, true, 3 | 4) => FiniteType::H(k),
        _ if bonds == [3, 4, 3] => FiniteType::F4,
        _ => return None,
    };
    Some(Recognised {
        kind,
        labelling: path,
    })
}

fn classify_fork(
    matrix: &CoxeterMatrix,
    comp: &[usize],
    neighbours: &dyn Fn(usize) -> Vec<usize>,
) -> Option<Recognised> {
    if comp
        .iter()
        .any(|&i| neighbours(i).iter().any(|&j| matrix.raw(i, j) != 3))
    {
        return None;
    }
    let centre = *comp.iter().find(|&&i| neighbours(i).len() == 3)?;
    let mut arms: Vec<Vec<usize>> = neighbours(centre)
        .into_iter()
        .map(|start| walk_arm(start, centre, neighbours))
        .collect();
    arms.sort_by_key(|a| (a.len(), a[0]));
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    let kind = match lens.as_slice() {
        [1, 1, r] => FiniteType::D(r + 3),
        [1, 2, 2] => FiniteType::E(6),
        [1, 2, 3] => FiniteType::E(7),
        [1, 2, 4] => FiniteType::E(8),
        _ => return None,
    };
    let labelling = match kind {
        FiniteType::D(_) => {
            let mut l = vec![arms[0][0], arms[1][0], centre];
            l.extend(&arms[2]);
            l
        }
        // E types are only used for finiteness; keep a stable order
        _ => comp.to_vec(),
    };
    Some(Recognised { kind, labelling })
}

/// Classification of every component of the diagram on `subset`, or `None`
/// if some component is infinite.
pub fn classify_subset(matrix: &CoxeterMatrix, subset: &[usize]) -> Option<Vec<Recognised>> {
    components(matrix, subset)
        .iter()
        .map(|c| classify_component(matrix, c))
        .collect()
}

pub fn is_finite_subset(matrix: &CoxeterMatrix, subset: &[usize]) -> bool {
    classify_subset(matrix, subset).is_some()
}

/// `|W_J|` when finite.
pub fn subset_order(matrix: &CoxeterMatrix, subset: &[usize]) -> Option<u128> {
    classify_subset(matrix, subset).map(|cs| cs.iter().map(|c| c.kind.order()).product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(rank: usize, bonds: &[u32]) -> CoxeterMatrix {
        let b: Vec<_> = bonds
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1, i + 2, if m == 0 { None } else { Some(m) }))
            .collect();
        CoxeterMatrix::from_bonds(rank, &b).unwrap()
    }

    fn all(m: &CoxeterMatrix) -> Vec<usize> {
        (0..m.rank()).collect()
    }

    fn kind(m: &CoxeterMatrix) -> Option<FiniteType> {
        let cs = classify_subset(m, &all(m))?;
        assert_eq!(cs.len(), 1);
        Some(cs[0].kind)
    }

    #[test]
    fn paths() {
        assert_eq!(kind(&path(3, &[3, 3])), Some(FiniteType::A(3)));
        assert_eq!(kind(&path(3, &[4, 3])), Some(FiniteType::B(3)));
        assert_eq!(kind(&path(3, &[3, 4])), Some(FiniteType::B(3)));
        assert_eq!(kind(&path(4, &[3, 4, 3])), Some(FiniteType::F4));
        assert_eq!(kind(&path(3, &[5, 3])), Some(FiniteType::H(3)));
        assert_eq!(kind(&path(4, &[3, 3, 5])), Some(FiniteType::H(4)));
        assert_eq!(kind(&path(2, &[7])), Some(FiniteType::I2(7)));
        assert_eq!(kind(&path(5, &[3, 3, 3, 5])), None);
        assert_eq!(kind(&path(3, &[4, 4])), None);
        assert_eq!(kind(&path(3, &[3, 6])), None);
        assert_eq!(kind(&path(2, &[0])), None);
    }

    #[test]
    fn b_labelling_starts_at_the_double_bond() {
        let m = path(3, &[3, 4]);
        let r = classify_component(&m, &[0, 1, 2]).unwrap();
        assert_eq!(r.labelling, [2, 1, 0]);
    }

    #[test]
    fn forks() {
        // s1, s3 hang off s2, then s2 - s4 - s5
        let d5 = CoxeterMatrix::from_bonds(
            5,
            &[
                (1, 2, Some(3)),
                (3, 2, Some(3)),
                (2, 4, Some(3)),
                (4, 5, Some(3)),
            ],
        )
        .unwrap();
        let r = classify_component(&d5, &all(&d5)).unwrap();
        assert_eq!(r.kind, FiniteType::D(5));
        assert_eq!(r.labelling, [0, 2, 1, 3, 4]);
        assert_eq!(r.kind.order(), 1920);

        let e6 = CoxeterMatrix::from_bonds(
            6,
            &[
                (1, 3, Some(3)),
                (3, 4, Some(3)),
                (4, 5, Some(3)),
                (5, 6, Some(3)),
                (2, 4, Some(3)),
            ],
        )
        .unwrap();
        assert_eq!(kind(&e6), Some(FiniteType::E(6)));

        let affine_d4 = CoxeterMatrix::from_bonds(
            5,
            &[
                (1, 3, Some(3)),
                (2, 3, Some(3)),
                (4, 3, Some(3)),
                (5, 3, Some(3)),
            ],
        )
        .unwrap();
        assert_eq!(kind(&affine_d4), None);
    }

    #[test]
    fn cycles_are_infinite() {
        let triangle =
            CoxeterMatrix::from_bonds(3, &[(1, 2, Some(3)), (2, 3, Some(3)), (1, 3, Some(3))])
                .unwrap();
        assert_eq!(kind(&triangle), None);
        assert!(is_finite_subset(&triangle, &[0, 1]));
    }

    #[test]
    fn reducible_orders_multiply() {
        let m = CoxeterMatrix::from_bonds(4, &[(1, 2, Some(3))]).unwrap();
        assert_eq!(components(&m, &all(&m)).len(), 3);
        assert_eq!(subset_order(&m, &all(&m)), Some(6 * 2 * 2));
    }

    #[test]
    fn orders() {
        assert_eq!(FiniteType::A(3).order(), 24);
        assert_eq!(FiniteType::B(3).order(), 48);
        assert_eq!(FiniteType::D(4).order(), 192);
        assert_eq!(FiniteType::I2(7).order(), 14);
        assert_eq!(FiniteType::F4.order(), 1152);
    }
}
