//! Reference computations written independently of the engine's
//! algorithms: ranks of explicit matrices, explicit equation systems and
//! enumerated bases. The acceptance gate compares the engine against them.

use std::collections::BTreeMap;

use qahom::complexes::Complex;
use qahom::filtvect::FiltMorphism;
use qahom::koszul::{KoszulData, PolySpec};
use qahom::linalg::{self, rat, Matrix, Rational};
use qahom::model::LiftingSquare;

/// Strictness by enumerating filtration steps: for every `p`,
/// `rank f|F_p V = dim(im f ∩ F_p W)`, both computed from ranks only.
pub fn strict_oracle(f: &FiltMorphism) -> bool {
    let m = f.matrix();
    let (rows, cols) = m.shape();
    let sw = f.source().weights();
    let tw = f.target().weights();
    let r = linalg::rank(m);
    let steps: Vec<i64> = sw.iter().chain(tw).copied().collect();
    steps.iter().all(|&p| {
        let src: Vec<usize> = (0..cols).filter(|&j| sw[j] <= p).collect();
        let mut restricted = Matrix::zeros(rows, src.len());
        for (c, &j) in src.iter().enumerate() {
            for i in 0..rows {
                restricted.set(i, c, m.get(i, j).clone());
            }
        }
        let tgt: Vec<usize> = (0..rows).filter(|&i| tw[i] <= p).collect();
        let mut step = Matrix::zeros(rows, tgt.len());
        for (c, &i) in tgt.iter().enumerate() {
            step.set(i, c, rat(1));
        }
        let meet = r + tgt.len() - linalg::rank(&m.hstack(&step));
        linalg::rank(&restricted) == meet
    })
}

pub fn strict_mono_oracle(f: &FiltMorphism) -> bool {
    linalg::rank(f.matrix()) == f.source().dim() && strict_oracle(f)
}

pub fn strict_epi_oracle(f: &FiltMorphism) -> bool {
    linalg::rank(f.matrix()) == f.target().dim() && strict_oracle(f)
}

/// Dimensions of cohomology from ranks of the differentials.
pub fn cohomology_dims(x: &Complex) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for n in x.support() {
        let dim = x.object(n).dim();
        let out_rank = linalg::rank(&x.differential_matrix(n));
        let in_rank = linalg::rank(&x.differential_matrix(n - 1));
        out.insert(n, dim - out_rank - in_rank);
    }
    out
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Whether a filtered lift exists. Every entry of the lift is an unknown;
/// chain-map, triangle and filtration conditions are explicit equations.
pub fn brute_force_lift_exists(sq: &LiftingSquare) -> bool {
    let b = sq.left.target();
    let x = sq.right.source();
    let degrees: Vec<i64> = b.support().into_iter().filter(|n| x.object(*n).dim() > 0).collect();
    let mut offsets = BTreeMap::new();
    let mut total = 0;
    for &n in &degrees {
        offsets.insert(n, total);
        total += x.object(n).dim() * b.object(n).dim();
    }
    let build = |v: &[Rational]| -> BTreeMap<i64, Matrix> {
        degrees
            .iter()
            .map(|&n| {
                let (xr, bc) = (x.object(n).dim(), b.object(n).dim());
                let mut m = Matrix::zeros(xr, bc);
                for i in 0..xr {
                    for j in 0..bc {
                        m.set(i, j, v[offsets[&n] + i * bc + j].clone());
                    }
                }
                (n, m)
            })
            .collect()
    };
    let comp = |h: &BTreeMap<i64, Matrix>, n: i64| {
        h.get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(x.object(n).dim(), b.object(n).dim()))
    };
    let residual = |v: &[Rational], affine: bool| -> Vec<Rational> {
        let h = build(v);
        let mut out = Vec::new();
        let push = |out: &mut Vec<Rational>, m: Matrix| out.extend(m.entries().iter().cloned());
        let all: Vec<i64> =
            (b.support().first().copied().unwrap_or(0) - 1..=b.support().last().copied().unwrap_or(0) + 1).collect();
        for &n in &all {
            push(
                &mut out,
                &(&x.differential_matrix(n) * &comp(&h, n)) - &(&comp(&h, n + 1) * &b.differential_matrix(n)),
            );
            let mut t = &comp(&h, n) * &sq.left.component_matrix(n);
            if affine {
                t = &t - &sq.top.component_matrix(n);
            }
            push(&mut out, t);
            let mut u = &sq.right.component_matrix(n) * &comp(&h, n);
            if affine {
                u = &u - &sq.bottom.component_matrix(n);
            }
            push(&mut out, u);
            for i in 0..x.object(n).dim() {
                for j in 0..b.object(n).dim() {
                    if x.object(n).weights()[i] > b.object(n).weights()[j] {
                        out.push(comp(&h, n).get(i, j).clone());
                    }
                }
            }
        }
        out
    };
    let zero = vec![rat(0); total];
    let constant = residual(&zero, true);
    let mut a = Matrix::zeros(constant.len(), total);
    for k in 0..total {
        let mut e = zero.clone();
        e[k] = rat(1);
        for (i, c) in residual(&e, false).into_iter().enumerate() {
            a.set(i, k, c);
        }
    }
    let rhs: Vec<Rational> = constant.iter().map(|c| -c).collect();
    linalg::solve_affine(&a, &rhs).expect("shapes agree").is_some()
}

/// `k`-subsets of `0..n` in lexicographic order, by filtering all masks.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..1usize << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|s| s.len() == k)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Contraction `f_S ↦ Σ_l (-1)^l m_{s_l} f_{S∖s_l}` with `l` counted from 1.
pub fn contraction(rank: usize, k: usize, m: &[Rational]) -> Matrix {
    let src = subsets(rank, k);
    let tgt = subsets(rank, k - 1);
    let mut d = Matrix::zeros(tgt.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        for (l, &sl) in s.iter().enumerate() {
            let rest: Vec<usize> = s.iter().copied().filter(|&i| i != sl).collect();
            let row = tgt.iter().position(|t| *t == rest).unwrap();
            let sign = if (l + 1) % 2 == 0 { rat(1) } else { rat(-1) };
            d.set(row, c, &m[sl] * sign);
        }
    }
    d
}

/// Evaluates the fancy differential on `1 ⊗ f_S` at `m`, giving the
/// base-changed differential in the basis of `subsets`.
pub fn specialized_fancy(k: &KoszulData, j: usize, m: &[Rational]) -> Matrix {
    let rank = k.rank();
    let src = subsets(rank, j);
    let tgt = subsets(rank, j - 1);
    let d = k.differential(j).unwrap().into_matrix();
    let mut out = Matrix::zeros(tgt.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        let col = k
            .layer(j)
            .iter()
            .position(|b| b.subset == *s && b.sym_degree() == 0)
            .unwrap();
        for (row, b) in k.layer(j - 1).iter().enumerate() {
            let coeff = d.get(row, col);
            if *coeff == rat(0) {
                continue;
            }
            let value = b
                .monomial
                .iter()
                .zip(m)
                .fold(rat(1), |acc, (&e, x)| acc * num_pow(x, e));
            let t = tgt.iter().position(|t| *t == b.subset).unwrap();
            out.add_to(t, c, &(coeff * value));
        }
    }
    out
}

fn num_pow(x: &Rational, e: u32) -> Rational {
    (0..e).fold(rat(1), |acc, _| acc * x)
}

/// `dim Q[x]_{<=cutoff} / (monomial multiples of the partials of degree <=
/// cutoff)`, by direct linear algebra on coefficient vectors.
pub fn jacobian_oracle(f: &PolySpec, cutoff: usize) -> usize {
    let n = f.nvars();
    let mut monos: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        monos = monos
            .into_iter()
            .flat_map(|m| (0..=cutoff as u32).map(move |e| [m.clone(), vec![e]].concat()))
            .collect();
    }
    monos.retain(|m| m.iter().sum::<u32>() as usize <= cutoff);
    let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let d = f.derivative(i);
        for q in &monos {
            let mut v = vec![rat(0); monos.len()];
            let mut fits = true;
            for (e, c) in &d {
                let prod: Vec<u32> = e.iter().zip(q).map(|(a, b)| a + b).collect();
                match index.get(&prod) {
                    Some(&k) => v[k] += c,
                    None => fits = false,
                }
            }
            if fits {
                gens.push(v);
            }
        }
    }
    let mut a = Matrix::zeros(monos.len(), gens.len());
    for (c, v) in gens.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            a.set(i, c, x.clone());
        }
    }
    monos.len() - linalg::rank(&a)
}
