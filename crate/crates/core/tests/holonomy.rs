use braidcryst::braid::{generator_a, QuotientElement};
use braidcryst::gamma::build_generators;
use braidcryst::group_spec::GroupSpec;
use braidcryst::holonomy::{
    betti_first, betti_rank, block_structure, center_basis_for, char_poly_direct,
    char_poly_factored, holonomy_matrix, matrix_of, matrix_order, n_block, ordered_basis,
    section_matrices, spans_fixed_lattice, trace_vector,
};
use braidcryst::intmat::{Int, Matrix};
use std::collections::BTreeMap;

#[test]
fn basis_sizes() {
    assert_eq!(ordered_basis(3).unwrap().len(), 3);
    let b5 = ordered_basis(5).unwrap();
    assert_eq!(b5.len(), 10);
    assert_eq!(b5.orbits().len(), 2);
    let b15 = ordered_basis(15).unwrap();
    assert_eq!(b15.len(), 28);
    let lens: Vec<usize> = b15.orbits().iter().map(|o| o.len).collect();
    assert_eq!(lens, vec![3, 5, 5, 15]);
}

#[test]
fn basis_spans_the_gamma_lattice() {
    for q in [3, 5, 7, 9, 15, 21] {
        let b = ordered_basis(q).unwrap();
        let g = build_generators(b.spec()).unwrap();
        assert_eq!(b.lattice(), g.lattice(), "q = {q}");
    }
}

#[test]
fn q3_is_n3() {
    let h = holonomy_matrix(3).unwrap();
    assert_eq!(
        h.matrix,
        Matrix::from_i64_rows(&[vec![1, 0, 3], vec![0, 0, -1], vec![0, 1, -1]])
    );
    assert_eq!(h.matrix, n_block(3, 3));
}

#[test]
fn action_matches_block_assembly() {
    for q in [3, 5, 7, 9, 15, 21] {
        let h = holonomy_matrix(q).unwrap();
        assert_eq!(h.matrix, block_structure(q).unwrap().assemble(), "q = {q}");
    }
}

#[test]
fn action_matches_word_conjugation() {
    // act() against conjugation through the group law
    let h = holonomy_matrix(5).unwrap();
    let inv = h.generator.inverse();
    for (c, e) in h.basis.entries().iter().enumerate() {
        let x = QuotientElement::from_pure(e.vector.clone()).unwrap();
        let img = &(&h.generator * &x) * &inv;
        let mut expected = braidcryst::braid::PureClassVector::zero(5);
        for (r, f) in h.basis.entries().iter().enumerate() {
            expected = &expected + &f.vector.scaled(h.matrix.get(r, c));
        }
        assert_eq!(img.pure(), &expected);
    }
}

#[test]
fn determinant_and_order() {
    for q in [3u64, 5, 7, 9, 15] {
        let h = holonomy_matrix(q).unwrap();
        assert_eq!(h.matrix.determinant(), Int::from(1), "q = {q}");
        assert_eq!(matrix_order(&h.matrix, q), Some(q), "q = {q}");
    }
}

#[test]
fn char_polys() {
    assert_eq!(char_poly_factored(3).unwrap().factors, BTreeMap::from([(3, 1)]));
    assert_eq!(char_poly_factored(5).unwrap().factors, BTreeMap::from([(5, 2)]));
    assert_eq!(
        char_poly_factored(15).unwrap().factors,
        BTreeMap::from([(3, 1), (5, 2), (15, 1)])
    );
    for q in [3, 5, 9, 15] {
        let h = holonomy_matrix(q).unwrap();
        let f = char_poly_factored(q).unwrap();
        assert_eq!(f.degree() as usize, h.dim());
        assert_eq!(f.expand(), char_poly_direct(&h.matrix), "q = {q}");
    }
}

#[test]
fn betti_numbers() {
    for (q, b) in [(3, 1), (5, 2), (7, 3), (9, 4), (15, 4)] {
        assert_eq!(betti_first(q).unwrap(), b);
        assert_eq!(betti_rank(&holonomy_matrix(q).unwrap().matrix) as u64, b);
    }
}

#[test]
fn centers() {
    for q in [3, 5, 7, 9, 15] {
        let h = holonomy_matrix(q).unwrap();
        let c = center_basis_for(&h.basis).unwrap();
        assert_eq!(c.rank() as u64, betti_first(q).unwrap());
        assert!(spans_fixed_lattice(&h.matrix, &c.coords), "q = {q}");
    }
    let h = holonomy_matrix(5).unwrap();
    let c = center_basis_for(&h.basis).unwrap();
    assert_eq!(c.labels[0], "e_{1,0,1}");
    assert_eq!(c.coords[1].iter().filter(|x| **x == Int::from(1)).count(), 5);
}

#[test]
fn faithful() {
    let h = holonomy_matrix(9).unwrap();
    let mut p = h.matrix.clone();
    for _ in 1..9 {
        assert!(!p.is_identity());
        p = p.mul(&h.matrix);
    }
    assert!(p.is_identity());
}

#[test]
fn identity_acts_trivially() {
    let b = ordered_basis(5).unwrap();
    let id = QuotientElement::identity(5).unwrap();
    assert_eq!(matrix_of(&id, &b.vectors()).unwrap(), Matrix::identity(10));
}

#[test]
fn lattice_not_preserved() {
    // σ_1 moves the adjacent-pair sum of Γ_5 off its lattice
    let b = ordered_basis(5).unwrap();
    let s = braidcryst::braid::generator_sigma(1, 5).unwrap();
    assert!(matches!(
        matrix_of(&s, &b.vectors()),
        Err(braidcryst::Error::LatticeNotPreserved(_))
    ));
    // pure elements act trivially
    let a = generator_a(1, 2, 5).unwrap();
    assert_eq!(matrix_of(&a, &b.vectors()).unwrap(), Matrix::identity(10));
}

#[test]
fn c_basis_is_conjugate_to_n3() {
    let spec = GroupSpec::parse("Z3").unwrap();
    let g = build_generators(&spec).unwrap();
    let ms = section_matrices(&g).unwrap();
    let h = holonomy_matrix(3).unwrap();
    // P maps ordered-basis coordinates to C-basis coordinates
    let b = h.basis.vectors();
    let cb: Vec<Vec<Int>> = g.lattice_basis().iter().map(|x| x.vector.coords().to_vec()).collect();
    let p = braidcryst::intmat::rational_coordinates(&cb, &b).unwrap();
    let p = Matrix::from_columns(3, &p.into_iter().map(|c| c.into_iter().map(|x| x.to_integer()).collect()).collect::<Vec<_>>());
    assert_eq!(p.determinant().magnitude(), &num_bigint::BigUint::from(1u32));
    assert_eq!(ms[0].1.mul(&p), p.mul(&h.matrix));
}

#[test]
fn trace_vector_q5() {
    let h = holonomy_matrix(5).unwrap();
    let tv = trace_vector(&h.matrix, 5);
    let expect: Vec<Int> = [10, 0, 0, 0, 0].iter().map(|&x| Int::from(x)).collect();
    assert_eq!(tv, expect);
}

#[test]
fn non_cyclic_is_out_of_scope() {
    assert!(braidcryst::holonomy::ordered_basis_for(&GroupSpec::parse("Z3xZ3").unwrap()).is_err());
}
