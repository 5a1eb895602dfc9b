//! Hermite and Smith normal forms with unimodular transforms.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, Integer};

/// Row Hermite normal form: `u * a = h`.
#[derive(Debug, Clone)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    /// Column of the leading entry of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

/// Smith normal form: `u * a * v = diag(d)` with `d[0] | d[1] | ...`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub d: Vec<Integer>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.d.len()
    }
}

/// Working copy of a matrix as nested rows; the normal form loops mostly
/// touch whole rows.
struct Rows {
    cols: usize,
    rows: Vec<Vec<Integer>>,
}

impl Rows {
    fn from(m: &IntMatrix) -> Self {
        Self {
            cols: m.cols(),
            rows: (0..m.rows()).map(|i| m.row(i).to_vec()).collect(),
        }
    }

    fn into_matrix(self) -> IntMatrix {
        let r = self.rows.len();
        IntMatrix::new(r, self.cols, self.rows.into_iter().flatten().collect())
            .expect("row lengths are consistent")
    }

    /// Replaces rows `(p, q)` by `(x p + y q, s p + t q)`.
    fn combine(&mut self, p: usize, q: usize, x: &Integer, y: &Integer, s: &Integer, t: &Integer) {
        for j in 0..self.cols {
            let a = &self.rows[p][j];
            let b = &self.rows[q][j];
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let np = x * a + y * b;
            let nq = s * a + t * b;
            self.rows[p][j] = np;
            self.rows[q][j] = nq;
        }
    }

    /// `row[q] -= k * row[p]`.
    fn axpy(&mut self, q: usize, k: &Integer, p: usize) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            if self.rows[p][j].is_zero() {
                continue;
            }
            let d = k * &self.rows[p][j];
            self.rows[q][j] -= d;
        }
    }

    fn negate(&mut self, p: usize) {
        for x in &mut self.rows[p] {
            *x = -&*x;
        }
    }
}

/// Column operations are done as row operations on the transpose.
fn transpose_rows(r: &Rows) -> Rows {
    let n = r.rows.len();
    let mut out = vec![vec![Integer::zero(); n]; r.cols];
    for (i, row) in r.rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[j][i] = x.clone();
        }
    }
    Rows { cols: n, rows: out }
}

/// Coefficients `(x, y, s, t)` of a unimodular 2×2 step sending `(a, b)` to
/// `(gcd, 0)`.
fn gcd_step(a: &Integer, b: &Integer) -> (Integer, Integer, Integer, Integer) {
    let e = a.extended_gcd(b);
    let g = e.gcd;
    (e.x, e.y, -(b / &g), a / &g)
}

pub fn hnf(a: &IntMatrix) -> HnfResult {
    let m = a.rows();
    let n = a.cols();
    let mut h = Rows::from(a);
    let mut u = Rows::from(&IntMatrix::identity(m));
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..n {
        if p == m {
            break;
        }
        for i in p + 1..m {
            if h.rows[i][col].is_zero() {
                continue;
            }
            let (x, y, s, t) = gcd_step(&h.rows[p][col], &h.rows[i][col]);
            h.combine(p, i, &x, &y, &s, &t);
            u.combine(p, i, &x, &y, &s, &t);
        }
        if h.rows[p][col].is_zero() {
            continue;
        }
        if h.rows[p][col].is_negative() {
            h.negate(p);
            u.negate(p);
        }
        let pivot = h.rows[p][col].clone();
        for r in 0..p {
            let q = h.rows[r][col].div_floor(&pivot);
            h.axpy(r, &q, p);
            u.axpy(r, &q, p);
        }
        pivots.push(col);
        p += 1;
    }
    HnfResult {
        h: h.into_matrix(),
        u: u.into_matrix(),
        rank: p,
        pivots,
    }
}

pub fn snf(a: &IntMatrix) -> SnfResult {
    let m = a.rows();
    let n = a.cols();
    // `w` holds the working matrix; `wt` is refreshed from it whenever column
    // operations are needed.
    let mut w = Rows::from(a);
    let mut u = Rows::from(&IntMatrix::identity(m));
    let mut vt = Rows::from(&IntMatrix::identity(n));
    let mut d = Vec::new();

    for t in 0..m.min(n) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &w.rows[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < w.rows[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.rows.swap(t, bi);
        u.rows.swap(t, bi);
        if bj != t {
            for row in &mut w.rows {
                row.swap(t, bj);
            }
            vt.rows.swap(t, bj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if w.rows[i][t].is_zero() {
                    continue;
                }
                dirty = true;
                let (piv, x) = (w.rows[t][t].clone(), w.rows[i][t].clone());
                if x.is_multiple_of(&piv) {
                    let q = &x / &piv;
                    w.axpy(i, &q, t);
                    u.axpy(i, &q, t);
                } else {
                    let (a1, b1, c1, d1) = gcd_step(&piv, &x);
                    w.combine(t, i, &a1, &b1, &c1, &d1);
                    u.combine(t, i, &a1, &b1, &c1, &d1);
                }
            }
            let mut wt = transpose_rows(&w);
            for j in t + 1..n {
                if wt.rows[j][t].is_zero() {
                    continue;
                }
                dirty = true;
                let (piv, x) = (wt.rows[t][t].clone(), wt.rows[j][t].clone());
                if x.is_multiple_of(&piv) {
                    let q = &x / &piv;
                    wt.axpy(j, &q, t);
                    vt.axpy(j, &q, t);
                } else {
                    let (a1, b1, c1, d1) = gcd_step(&piv, &x);
                    wt.combine(t, j, &a1, &b1, &c1, &d1);
                    vt.combine(t, j, &a1, &b1, &c1, &d1);
                }
            }
            w = transpose_rows(&wt);
            if dirty {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let piv = w.rows[t][t].clone();
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !w.rows[i][j].is_multiple_of(&piv))
            });
            match offender {
                Some(i) => {
                    let one = Integer::one();
                    w.axpy(t, &-&one, i);
                    u.axpy(t, &-&one, i);
                }
                None => break,
            }
        }
        if w.rows[t][t].is_negative() {
            w.negate(t);
            u.negate(t);
        }
        d.push(w.rows[t][t].clone());
    }

    SnfResult {
        d,
        u: u.into_matrix(),
        v: vt.into_matrix().transpose(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use proptest::prelude::*;

    /// gcd of all k×k minors, by brute-force expansion over row/column subsets.
    fn minor_gcd(a: &IntMatrix, k: usize) -> Integer {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for last in (k - 1)..n {
                for mut s in subsets(last, k - 1) {
                    s.push(last);
                    out.push(s);
                }
            }
            out
        }
        let mut g = Integer::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let minor = a.select_rows(&rs).select_columns(&cs).det();
                g = g.gcd(&minor);
            }
        }
        g
    }

    fn diag_of(r: &SnfResult, rows: usize, cols: usize) -> IntMatrix {
        IntMatrix::diagonal(rows, cols, &r.d)
    }

    fn check_snf(a: &IntMatrix) {
        let r = snf(a);
        assert_eq!(&(&r.u * a) * &r.v, diag_of(&r, a.rows(), a.cols()));
        assert!(r.u.det().abs().is_one());
        assert!(r.v.det().abs().is_one());
        for w in r.d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken: {:?}", r.d);
        }
        let mut prod = Integer::one();
        for (k, dk) in r.d.iter().enumerate() {
            assert!(dk.is_positive());
            prod *= dk;
            assert_eq!(prod, minor_gcd(a, k + 1));
        }
    }

    fn check_hnf(a: &IntMatrix) {
        let r = hnf(a);
        assert_eq!(&r.u * a, r.h);
        assert!(r.u.det().abs().is_one());
        for (i, &c) in r.pivots.iter().enumerate() {
            let p = r.h.get(i, c);
            assert!(p.is_positive());
            for j in 0..c {
                assert!(r.h.get(i, j).is_zero());
            }
            for above in 0..i {
                let x = r.h.get(above, c);
                assert!(!x.is_negative() && x < p);
            }
        }
        for i in r.rank..a.rows() {
            assert!(r.h.row(i).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn hnf_identity_and_zero() {
        let r = hnf(&IntMatrix::identity(2));
        assert_eq!(r.h, IntMatrix::identity(2));
        assert_eq!(r.rank, 2);
        let r = hnf(&IntMatrix::zeros(2, 2));
        assert_eq!(r.h, IntMatrix::zeros(2, 2));
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn hnf_small_example() {
        // Rows (2,4), (6,8): subtracting 3×row1 gives (0,-4); negate → (0,4);
        // reduce 4 into [0,4) above → (2,0). Hermite form [[2,0],[0,4]].
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let r = hnf(&a);
        assert_eq!(r.rank, 2);
        assert_eq!(r.h, IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
        check_hnf(&a);
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(&IntMatrix::identity(3)).d, vec![int(1), int(1), int(1)]);
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(minor_gcd(&a, 1), int(2));
        assert_eq!(minor_gcd(&a, 2), int(8));
        assert_eq!(snf(&a).d, vec![int(2), int(4)]);
        let b = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(snf(&b).d, vec![int(1), int(6)]);
        check_snf(&a);
        check_snf(&b);
    }

    #[test]
    fn empty_matrices() {
        let r = snf(&IntMatrix::zeros(0, 3));
        assert!(r.d.is_empty());
        assert_eq!(r.v, IntMatrix::identity(3));
        let r = hnf(&IntMatrix::zeros(3, 0));
        assert_eq!(r.rank, 0);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-50i64..=50, r * c)
                .prop_map(move |v| IntMatrix::from_i64(r, c, &v))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn snf_fuzz(a in small_matrix()) {
            let r = snf(&a);
            prop_assert_eq!(&(&r.u * &a) * &r.v, diag_of(&r, a.rows(), a.cols()));
            prop_assert!(r.u.det().abs().is_one());
            prop_assert!(r.v.det().abs().is_one());
            for w in r.d.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            if a.is_square() {
                let det = a.det().abs();
                if !det.is_zero() {
                    prop_assert_eq!(r.d.iter().product::<Integer>(), det);
                }
            }
        }

        #[test]
        fn hnf_fuzz(a in small_matrix()) {
            check_hnf(&a);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn snf_matches_minor_gcds(a in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c)
                .prop_map(move |v| IntMatrix::from_i64(r, c, &v))
        })) {
            check_snf(&a);
        }
    }
}
