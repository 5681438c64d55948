use super::{Rep, RepMap};
use crate::linalg::{neg_mod, Mat};

/// Basis of `Hom(m, n)`: solutions of `m.arrow * f_v = f_u * n.arrow` for every arrow `u -> v`.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<RepMap> {
    assert!(m.same_algebra(n), "hom between different algebras");
    let p = m.modulus();
    let alg = m.algebra();
    let nv = alg.vertex_count();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dim_at(v) * n.dim_at(v);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    // index of f_v[r][c]
    let var = |v: usize, r: usize, c: usize| offset[v] + r * n.dim_at(v) + c;

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (id, a) in alg.quiver().arrows().iter().enumerate() {
        let (u, v) = (a.source, a.target);
        let ma = m.map(id);
        let na = n.map(id);
        for r in 0..m.dim_at(u) {
            for c in 0..n.dim_at(v) {
                let mut eq = vec![0u32; unknowns];
                // (M_a F_v)[r][c] = sum_k M_a[r][k] F_v[k][c]
                for k in 0..m.dim_at(v) {
                    let x = ma.get(r, k);
                    if x != 0 {
                        let i = var(v, k, c);
                        eq[i] = crate::linalg::add_mod(eq[i], x, p);
                    }
                }
                // - (F_u N_a)[r][c] = - sum_k F_u[r][k] N_a[k][c]
                for k in 0..n.dim_at(u) {
                    let x = na.get(k, c);
                    if x != 0 {
                        let i = var(u, r, k);
                        eq[i] = crate::linalg::add_mod(eq[i], neg_mod(x, p), p);
                    }
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    let system = Mat::from_row_vecs(&rows, unknowns, p);
    let kernel = system.kernel_basis();
    (0..kernel.rows())
        .map(|k| {
            let sol = kernel.row(k);
            RepMap::new(
                (0..nv)
                    .map(|v| {
                        Mat::from_vec(
                            m.dim_at(v),
                            n.dim_at(v),
                            p,
                            sol[offset[v]..offset[v + 1]].to_vec(),
                        )
                    })
                    .collect(),
            )
        })
        .collect()
}
