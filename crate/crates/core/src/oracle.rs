//! Brute-force reference counts for `Stab(h, n, beta)` with a rank-one
//! class of degree `beta`. Shares no code with the splitting enumerator or
//! the canonical-form search: shapes are built from degree sequences, and
//! isomorphism is decided by trying every vertex permutation.

use std::collections::BTreeSet;

/// Per-vertex data that an isomorphism must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct VertexType {
    genus: u32,
    class: u32,
    legs: usize,
    degree: usize,
}

impl VertexType {
    fn stable(&self) -> bool {
        let val = self.legs + self.degree;
        match (self.class, self.genus) {
            (0, 0) => val >= 3,
            (0, 1) => val >= 1,
            _ => true,
        }
    }
}

#[derive(Clone, Debug)]
struct Shape {
    types: Vec<VertexType>,
    /// Symmetric multiplicities; the diagonal counts self-edges.
    matrix: Vec<Vec<u32>>,
}

fn permutations_within(types: &[VertexType]) -> Vec<Vec<usize>> {
    let n = types.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        types: &[VertexType],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == types.len() {
            out.push(perm.clone());
            return;
        }
        for j in 0..types.len() {
            if !used[j] && types[j] == types[i] {
                used[j] = true;
                perm[i] = j;
                rec(i + 1, types, perm, used, out);
                used[j] = false;
            }
        }
    }
    rec(0, types, &mut perm, &mut used, &mut out);
    out
}

fn permuted(matrix: &[Vec<u32>], p: &[usize]) -> Vec<Vec<u32>> {
    let n = matrix.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[p[i]][p[j]] = matrix[i][j];
        }
    }
    out
}

fn connected(matrix: &[Vec<u32>]) -> bool {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..n {
            if matrix[x][y] > 0 && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// All symmetric matrices with the given degrees (self-edges count twice).
/// Entry `(i, i)` is chosen first, then `(i, j)` for `j > i`, row by row.
fn realizations(degrees: &[usize]) -> Vec<Vec<Vec<u32>>> {
    fn fill(
        i: usize,
        j: usize,
        m: &mut Vec<Vec<u32>>,
        left: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        let n = left.len();
        if i == n {
            out.push(m.clone());
            return;
        }
        if j == n {
            if left[i] == 0 {
                fill(i + 1, i + 1, m, left, out);
            }
            return;
        }
        let choices: Vec<usize> = if j == i {
            (0..=left[i] / 2).collect()
        } else {
            (0..=left[i].min(left[j])).collect()
        };
        for k in choices {
            m[i][j] = k as u32;
            m[j][i] = k as u32;
            if j == i {
                left[i] -= 2 * k;
            } else {
                left[i] -= k;
                left[j] -= k;
            }
            fill(i, j + 1, m, left, out);
            if j == i {
                left[i] += 2 * k;
            } else {
                left[i] += k;
                left[j] += k;
            }
        }
        m[i][j] = 0;
        m[j][i] = 0;
    }
    let n = degrees.len();
    let mut out = Vec::new();
    fill(
        0,
        0,
        &mut vec![vec![0u32; n]; n],
        &mut degrees.to_vec(),
        &mut out,
    );
    out
}

/// Nondecreasing type lists of length `len` whose genus, class and leg
/// totals are `<= h`, `= beta`, `= n`, and whose degrees sum to twice the
/// edge count forced by the genus.
fn type_lists(
    types: &[VertexType],
    len: usize,
    h: u32,
    beta: u32,
    n: usize,
) -> Vec<Vec<VertexType>> {
    struct Ctx<'a> {
        types: &'a [VertexType],
        len: usize,
        h: u32,
        beta: u32,
        n: usize,
    }
    fn rec(
        c: &Ctx,
        start: usize,
        cur: &mut Vec<VertexType>,
        sums: (u32, u32, usize, usize),
        out: &mut Vec<Vec<VertexType>>,
    ) {
        let (g, a, l, d) = sums;
        if cur.len() == c.len {
            let edges = c.len - 1 + (c.h - g) as usize;
            if a == c.beta && l == c.n && d == 2 * edges {
                out.push(cur.clone());
            }
            return;
        }
        let max_degree = 2 * (c.len - 1 + (c.h - g) as usize);
        for i in start..c.types.len() {
            let t = c.types[i];
            let next = (g + t.genus, a + t.class, l + t.legs, d + t.degree);
            if next.0 > c.h || next.1 > c.beta || next.2 > c.n || next.3 > max_degree {
                continue;
            }
            cur.push(t);
            rec(c, i, cur, next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        &Ctx {
            types,
            len,
            h,
            beta,
            n,
        },
        0,
        &mut Vec::new(),
        (0, 0, 0, 0),
        &mut out,
    );
    out
}

fn shapes(h: u32, n: usize, beta: u32) -> Vec<Shape> {
    let max_vertices = (2 * h as i64 - 2 + n as i64 + 2 * beta as i64).max(1) as usize;
    let mut out = Vec::new();
    for v in 1..=max_vertices {
        let max_degree = 2 * (v - 1 + h as usize);
        let mut types = Vec::new();
        for genus in 0..=h {
            for class in 0..=beta {
                for legs in 0..=n {
                    for degree in 0..=max_degree {
                        let t = VertexType {
                            genus,
                            class,
                            legs,
                            degree,
                        };
                        if t.stable() && (v == 1 || degree >= 1) {
                            types.push(t);
                        }
                    }
                }
            }
        }
        for combo in type_lists(&types, v, h, beta, n) {
            let degrees: Vec<usize> = combo.iter().map(|t| t.degree).collect();
            let perms = permutations_within(&combo);
            let mut seen = BTreeSet::new();
            for m in realizations(&degrees) {
                if !connected(&m) {
                    continue;
                }
                let key = perms
                    .iter()
                    .map(|p| permuted(&m, p))
                    .min()
                    .expect("identity");
                if seen.insert(key) {
                    out.push(Shape {
                        types: combo.clone(),
                        matrix: m,
                    });
                }
            }
        }
    }
    out
}

/// Classes with leg labels `1..=n`, counted as orbits of leg placements
/// under the vertex automorphisms of each shape.
fn labelled_count(shape: &Shape, n: usize) -> usize {
    let autos: Vec<Vec<usize>> = permutations_within(&shape.types)
        .into_iter()
        .filter(|p| permuted(&shape.matrix, p) == shape.matrix)
        .collect();
    let mut placements = Vec::new();
    let mut remaining: Vec<usize> = shape.types.iter().map(|t| t.legs).collect();
    let mut cur = Vec::with_capacity(n);
    fn place(
        remaining: &mut Vec<usize>,
        cur: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..remaining.len() {
            if remaining[v] > 0 {
                remaining[v] -= 1;
                cur.push(v);
                place(remaining, cur, n, out);
                cur.pop();
                remaining[v] += 1;
            }
        }
    }
    place(&mut remaining, &mut cur, n, &mut placements);
    let orbits: BTreeSet<Vec<usize>> = placements
        .iter()
        .map(|a| {
            autos
                .iter()
                .map(|p| a.iter().map(|&v| p[v]).collect::<Vec<_>>())
                .min()
                .expect("identity")
        })
        .collect();
    orbits.len()
}

/// `(unlabelled-leg classes, labelled classes)` of `Stab(h, n, beta)`.
pub fn naive_stab_counts(h: u32, n: usize, beta: u32) -> (usize, usize) {
    let shapes = shapes(h, n, beta);
    let labelled = shapes.iter().map(|s| labelled_count(s, n)).sum();
    (shapes.len(), labelled)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_small_counts() {
        assert_eq!(naive_stab_counts(0, 3, 0).1, 1);
        assert_eq!(naive_stab_counts(0, 4, 0).1, 4);
        assert_eq!(naive_stab_counts(0, 5, 0).1, 26);
        assert_eq!(naive_stab_counts(1, 1, 0).1, 2);
        assert_eq!(naive_stab_counts(0, 2, 0).1, 0);
    }

    #[test]
    fn realizations_of_small_degrees() {
        // Degrees (2, 2): a double edge, or a self-edge at each end (disconnected).
        assert_eq!(realizations(&[2, 2]).len(), 2);
        assert_eq!(realizations(&[2]).len(), 1);
        assert_eq!(realizations(&[1]).len(), 0);
    }
}
