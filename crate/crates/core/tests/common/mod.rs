//! Test-side oracles and random domain generators, written without the
//! library's hull or enumeration code.
#![allow(dead_code)]

use capax::Rational;
use num::{BigInt, Integer, One, ToPrimitive};
use rand::Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn random_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    Rational::new(rng.gen_range(lo * den..=hi * den), den)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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

/// Points over a common denominator as integer vectors.
fn integer_points(points: &[Vec<Rational>]) -> Vec<Vec<i128>> {
    let l = points
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    points
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| (x.numer() * (&l / x.denom())).to_i128().expect("small test values"))
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) elimination; exact for integer matrices.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// p ∈ conv(q), for q ∪ {p} full-dimensional: by Carathéodory p then lies
/// in a nondegenerate simplex on d+1 points of q, and Cramer's rule gives
/// its barycentric coordinates as ratios of integer determinants.
fn in_hull_int(p: &[i128], q: &[&Vec<i128>]) -> bool {
    let d = p.len();
    // rows are coordinates plus the affine row; column j is (q_j, 1)
    let matrix = |cols: &[&[i128]]| -> Vec<Vec<i128>> {
        (0..=d)
            .map(|r| cols.iter().map(|c| if r < d { c[r] } else { 1 }).collect())
            .collect()
    };
    subsets(q.len(), d + 1).into_iter().any(|s| {
        let mut cols: Vec<&[i128]> = s.iter().map(|&i| q[i].as_slice()).collect();
        let full = det(matrix(&cols));
        if full == 0 {
            return false;
        }
        (0..=d).all(|j| {
            let saved = cols[j];
            cols[j] = p;
            let dj = det(matrix(&cols));
            cols[j] = saved;
            dj * full.signum() >= 0
        })
    })
}

pub fn in_hull(p: &[Rational], q: &[Vec<Rational>]) -> bool {
    let mut all = q.to_vec();
    all.push(p.to_vec());
    let ints = integer_points(&all);
    let (p, q) = ints.split_last().unwrap();
    in_hull_int(p, &q.iter().collect::<Vec<_>>())
}

fn directions(d: usize) -> Vec<Vec<i128>> {
    let mut out: Vec<Vec<i128>> = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w| {
                (-2..=2).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|w| w.iter().any(|&x| x != 0));
    out
}

/// Extreme points of a full-dimensional conv(points), deduplicated, in
/// lexicographic order. A unique maximizer of some small integer functional
/// is extreme; the remaining points go through the Carathéodory test.
pub fn extreme_points(points: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let ints = integer_points(&pts);
    let dirs = directions(pts[0].len());
    let dot = |w: &[i128], x: &[i128]| -> i128 { w.iter().zip(x).map(|(a, b)| a * b).sum() };
    (0..pts.len())
        .filter(|&i| {
            let others: Vec<&Vec<i128>> = ints.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x).collect();
            let certified = dirs.iter().any(|w| {
                let val = dot(w, &ints[i]);
                others.iter().all(|x| dot(w, x) < val)
            });
            certified || !in_hull_int(&ints[i], &others)
        })
        .map(|i| pts[i].clone())
        .collect()
}

/// All coordinate projections of p (zeroing every subset of coordinates).
pub fn projections(p: &[Rational]) -> Vec<Vec<Rational>> {
    let d = p.len();
    (0..1u32 << d)
        .map(|mask| {
            (0..d)
                .map(|i| if mask >> i & 1 == 1 { Rational::zero() } else { p[i].clone() })
                .collect()
        })
        .collect()
}

/// Vertices of the downward closure of conv(generators).
pub fn downward_closed_vertices(generators: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let all: Vec<_> = generators.iter().flat_map(|g| projections(g)).collect();
    extreme_points(&all)
}

/// Vertex list of a random full-dimensional downward-closed polytope with
/// at most `max_vertices` vertices.
pub fn random_polytope<R: Rng>(rng: &mut R, d: usize, max_vertices: usize) -> Vec<Vec<Rational>> {
    loop {
        let n = rng.gen_range(1..=3);
        // zero coordinates keep the vertex count down in higher dimension
        let gens: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..d)
                    .map(|_| if rng.gen_bool(0.25) { Rational::zero() } else { random_rational(rng, 0, 5, 4) })
                    .collect()
            })
            .collect();
        // a generator with all coordinates positive makes Ω full-dimensional
        if !gens.iter().any(|g| g.iter().all(Rational::is_positive)) {
            continue;
        }
        let v = downward_closed_vertices(&gens);
        if v.len() <= max_vertices {
            return v;
        }
    }
}

pub fn support(vertices: &[Vec<Rational>], v: &[u64]) -> Rational {
    vertices
        .iter()
        .map(|x| x.iter().zip(v).map(|(a, &b)| a * &Rational::from(b)).sum::<Rational>())
        .max()
        .expect("nonempty")
}

fn compositions(k: u64, d: usize) -> Vec<Vec<u64>> {
    if d == 1 {
        return vec![vec![k]];
    }
    (0..=k)
        .flat_map(|first| {
            compositions(k - first, d - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// c_k as the minimum of the support function over all compositions of k.
pub fn brute_capacity(vertices: &[Vec<Rational>], k: u64) -> Rational {
    let d = vertices[0].len();
    compositions(k, d)
        .iter()
        .map(|v| support(vertices, v))
        .min()
        .expect("k ≥ 1")
}

/// max Σv over v ∈ ℕ^d with ‖v‖* ≤ T, i.e. I(Ω°_T).
pub fn brute_lattice_max(vertices: &[Vec<Rational>], t: &Rational) -> u64 {
    let d = vertices[0].len();
    let extents: Vec<Rational> = (0..d)
        .map(|i| vertices.iter().map(|v| v[i].clone()).max().unwrap())
        .collect();
    let bounds: Vec<u64> = extents.iter().map(|e| (t / e).floor_i64() as u64).collect();
    let mut best = 0;
    let mut v = vec![0u64; d];
    loop {
        if support(vertices, &v) <= *t {
            best = best.max(v.iter().sum());
        }
        let mut i = 0;
        loop {
            if i == d {
                return best;
            }
            if v[i] < bounds[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// k-th smallest element of {m·a_i : m ≥ 1}.
pub fn ellipsoid_oracle(a: &[Rational], k: u64) -> Rational {
    let mut all: Vec<Rational> = a
        .iter()
        .flat_map(|ai| (1..=k as i64).map(move |m| ai * &Rational::from(m)))
        .collect();
    all.sort();
    all[k as usize - 1].clone()
}

pub struct Timer(std::time::Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(std::time::Instant::now())
    }

    pub fn secs(&self) -> f64 {
        self.0.elapsed().as_secs_f64()
    }
}
