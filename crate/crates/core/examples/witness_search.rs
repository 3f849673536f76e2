// Searching a subspace for a full-rank line, and the codimension `n - 1`
// space where no search can succeed.

use fullrank::gallery::sharpness_example;
use fullrank::lines::{witness_search, witness_search_parallel, Strategy};
use fullrank::spaces::{LinearSubspace, Shape, DEFAULT_ELEMENT_BUDGET};
use fullrank::{canonical_n, Field, Matrix};

fn main() {
    let f = Field::gf3();
    let shape = Shape::new(f, 3, 3);
    let n = canonical_n(f, 3, 3, 1).unwrap();

    // Trace-zero matrices: codimension 1 <= n - 2.
    let gens: Vec<Matrix> = (0..9)
        .filter(|&k| k != 8)
        .map(|k| {
            let (i, j) = (k / 3, k % 3);
            let mut m = Matrix::unit(f, 3, 3, i, j);
            if i == j {
                m = m.sub(&Matrix::unit(f, 3, 3, 2, 2)).unwrap();
            }
            m
        })
        .collect();
    let traceless = LinearSubspace::from_generators(shape, &gens).unwrap().to_affine();
    let serial = witness_search(&traceless, &n, Strategy::Exhaustive, DEFAULT_ELEMENT_BUDGET).unwrap();
    let parallel = witness_search_parallel(&traceless, &n, DEFAULT_ELEMENT_BUDGET).unwrap();
    assert_eq!(serial, parallel);
    println!("trace-zero space: {:?} after {} members", serial.status, serial.cases_examined);
    println!("witness:\n{}", serial.certificate.as_ref().unwrap().a);

    let random = witness_search(&traceless, &n, Strategy::Random { seed: 0 }, 1000).unwrap();
    println!("random search: {:?} after {} samples", random.status, random.cases_examined);

    let (sharp, n) = sharpness_example(3, 3, f).unwrap();
    let out = witness_search(&sharp.to_affine(), &n, Strategy::Exhaustive, DEFAULT_ELEMENT_BUDGET).unwrap();
    println!("codim {} sharpness space: {:?} after {} members", sharp.codim(), out.status, out.cases_examined);
}
