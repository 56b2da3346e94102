//! Chevalley bases of the simple Lie algebras of type B2 and G2: structure
//! constants `N_{αβ}`, Cartan brackets, and the integer matrices of the
//! adjoint representation in the fixed basis order (root vectors, then h_1,
//! h_2).

pub mod rep;
pub mod table;
pub mod verify;

pub use table::{BasisElement, IntMat, StructureTable};
pub use verify::{verify_chevalley_basis, BasisReport, Check};

/// Product of integer matrices.
pub fn int_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let p = b[0].len();
    let mut c = vec![vec![0; p]; n];
    for i in 0..n {
        for k in 0..b.len() {
            if a[i][k] != 0 {
                for j in 0..p {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}
