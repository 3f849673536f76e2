// Formal determinants of pencils `A + tN` and the classification of a line
// by the gcd of its maximal minors.

use fullrank::lines::line_full_rank;
use fullrank::polypencil::{classify_line, det_pencil, det_pencil_laplace, minor_gcd, rational_roots};
use fullrank::{canonical_n, Field, Matrix};

fn main() {
    let q = Field::Rational;
    let a = Matrix::from_rows(q, &[[1, 0, 2], [0, 3, 0], [1, 1, 1]]);
    let n = canonical_n(q, 3, 3, 2).unwrap();
    let g = det_pencil(&a, &n).unwrap();
    println!("det(A + tN) = {g}");
    assert_eq!(g, det_pencil_laplace(&a, &n).unwrap());
    println!("rational roots: {:?}", rational_roots(&g).unwrap().iter().map(|r| r.to_string()).collect::<Vec<_>>());
    println!("class: {:?}", classify_line(&a, &n).unwrap().class);

    // Non-square: the line is full rank exactly when the minor gcd has no root.
    let a = Matrix::from_rows(q, &[[0, 0], [1, 0], [0, 1]]);
    let n = canonical_n(q, 3, 2, 1).unwrap();
    println!("\n3x2 minor gcd = {}", minor_gcd(&a, &n).unwrap());
    let verdict = line_full_rank(&a, &n).unwrap();
    println!("full rank over Q: {}", verdict.is_full_rank());
    if let Some(cert) = verdict.certificate() {
        println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
    }
}
