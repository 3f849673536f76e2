// Rank, determinant, reduced echelon form and equivalence to the canonical
// rank form, over GF(2), GF(5) and the rationals.

use fullrank::{canonical_n, equivalence_apply, Field, Matrix};

fn main() {
    for field in [Field::gf2(), Field::prime(5).unwrap(), Field::Rational] {
        let m = Matrix::from_rows(field, &[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        println!("over {field}:");
        println!("{m}");
        println!("rank {}  det {}", m.rank(), m.det().unwrap());
        let rref = m.rref();
        println!("rref pivots {:?}", rref.pivots);
        println!("kernel basis columns: {}", m.kernel_basis().ncols());
        println!();
    }

    // Any rank-r matrix is P [[I_r, 0], [0, 0]] Q for invertible P, Q.
    let f = Field::gf3();
    let n = canonical_n(f, 3, 3, 2).unwrap();
    let p = Matrix::from_rows(f, &[[1, 1, 0], [0, 1, 2], [1, 0, 2]]);
    let q = Matrix::from_rows(f, &[[2, 0, 0], [1, 1, 0], [0, 1, 1]]);
    let moved = equivalence_apply(&p, &n, &q).unwrap();
    println!("P N Q over {f}:\n{moved}");
    println!("rank preserved: {} -> {}", n.rank(), moved.rank());
}
