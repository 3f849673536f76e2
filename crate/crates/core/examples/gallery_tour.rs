// The explicit constructions: the shifted-identity witness, the extremal bounded
// rank space, the forced-degree hyperplane and the GF(2) obstruction to a
// constant determinant.

use fullrank::gallery::{flanders_extremal, lemma1_witness, remark1_example, remark2_adjugate_sides, remark2_f2_example};
use fullrank::lines::{constant_det_witness_search, witness_search, Strategy};
use fullrank::polypencil::det_pencil;
use fullrank::spaces::DEFAULT_ELEMENT_BUDGET;
use fullrank::{canonical_n, Field};

fn main() {
    let f = Field::Rational;
    let a = lemma1_witness(4, 4, 2, f).unwrap();
    println!("shifted identity:\n{a}");
    println!("det(A + tN) = {}", det_pencil(&a, &canonical_n(f, 4, 4, 2).unwrap()).unwrap());

    let ext = flanders_extremal(3, 3, 2, Field::gf2()).unwrap();
    let max_rank = ext.elements(DEFAULT_ELEMENT_BUDGET).unwrap().map(|m| m.rank()).max().unwrap();
    println!("\nextremal space: dim {}, max rank {max_rank}", ext.dim());

    let (s, n) = remark1_example(3, Field::gf2()).unwrap();
    let m = s.element_at(0).unwrap();
    println!("\nforced-degree hyperplane member: det(M + tN) = {}", det_pencil(&m, &n).unwrap());

    let (s, n) = remark2_f2_example();
    let plain = witness_search(&s, &n, Strategy::Exhaustive, DEFAULT_ELEMENT_BUDGET).unwrap();
    let constant = constant_det_witness_search(&s, &n, DEFAULT_ELEMENT_BUDGET).unwrap();
    println!("\nGF(2) hyperplane: full-rank line {:?}, constant det {:?}", plain.status, constant.status);
    let agree = s.elements(DEFAULT_ELEMENT_BUDGET).unwrap().all(|m| {
        let (lhs, rhs) = remark2_adjugate_sides(&m).unwrap();
        lhs == rhs
    });
    println!("adjugate expansion holds on all {} members: {agree}", s.element_count().unwrap());
}
