// Enumerating every subspace of a given codimension, checked against the
// Gaussian binomial count, plus the text exchange format.

use fullrank::spaces::{count_subspaces, enumerate_affine, enumerate_subspaces, AffineSubspace, Shape};
use fullrank::Field;

fn main() {
    let shape = Shape::new(Field::gf2(), 3, 3);
    for codim in 0..=2 {
        let all = enumerate_subspaces(shape, codim).unwrap();
        println!("codim {codim}: {} subspaces (gaussian binomial {})", all.len(), count_subspaces(9, codim, 2));
    }

    let hyperplanes = enumerate_affine(shape, 1).unwrap();
    println!("affine hyperplanes: {}", hyperplanes.len());
    let s = hyperplanes.get(hyperplanes.len() - 1);
    let text = s.to_text();
    print!("last one:\n{text}");
    assert_eq!(AffineSubspace::from_text(&text).unwrap(), s);
    println!("members: {}", s.element_count().unwrap());
}
