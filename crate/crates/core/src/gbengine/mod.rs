//! Gröbner bases and the ideal operations built on them: membership,
//! containment, Frobenius powers, intersections, colons, saturation and
//! radical membership.

mod buchberger;
mod file;
mod ideal;
mod reduce;

pub use buchberger::{buchberger, is_groebner_basis};
pub use file::IdealFile;
pub use ideal::{
    bracket_power, colon, colon_by, frobenius_max_ideal, ideal_contains, ideal_eq, intersect, is_member,
    is_power_of, outside_frobenius_max, radical_member, saturate, Ideal,
};
pub use reduce::{divide_exact, normal_form, Budget, ReductionResult};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::matgen::{build_matrix, diagonal_product, prime_p_data, GenericMatrix};
    use crate::polycore::{parse_poly, print_poly, Field, MatrixKind, PolyRing, PrimeField, Rationals, VariableTable};

    fn sym_ring<F: Field>(field: F, n: usize) -> Arc<PolyRing<F>> {
        PolyRing::grevlex(field, VariableTable::new(MatrixKind::Symmetric, n).unwrap())
    }

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn i_t<F: Field>(m: &GenericMatrix<F>, t: usize) -> Ideal<F> {
        Ideal::new(m.ring(), m.ideal_gens(t).unwrap()).unwrap()
    }

    const B: Budget = Budget::unlimited();

    #[test]
    fn one_division_step() {
        let r = PolyRing::diagonal(Rationals, VariableTable::new(MatrixKind::Symmetric, 2).unwrap());
        let f = parse_poly("x[1,1]*x[2,2]", &r).unwrap();
        let det = parse_poly("x[1,1]*x[2,2] - x[1,2]^2", &r).unwrap();
        let res = normal_form(&f, std::slice::from_ref(&det)).unwrap();
        assert_eq!(print_poly(&res.remainder), "x[1,2]^2");
        assert!(!res.reduced_to_zero);
        assert!(normal_form(&det, std::slice::from_ref(&det)).unwrap().reduced_to_zero);
        assert!(normal_form(&f, &[r.zero()]).is_err());
    }

    #[test]
    fn single_generator_basis_is_itself() {
        let r = sym_ring(Rationals, 2);
        let det = parse_poly("x[1,1]*x[2,2] - x[1,2]^2", &r).unwrap();
        assert_eq!(buchberger(std::slice::from_ref(&det), &B).unwrap(), vec![det.monic()]);
        let two = det.scale(&Rationals.from_i64(2));
        assert_eq!(buchberger(&[two], &B).unwrap(), vec![det.monic()]);
        assert_eq!(print_poly(&det.monic()), "x[1,2]^2 - x[1,1]*x[2,2]");
    }

    #[test]
    fn linear_ideal() {
        let r = sym_ring(Rationals, 2);
        let a = parse_poly("x[1,1]", &r).unwrap();
        let b = parse_poly("x[1,1] + x[1,2]", &r).unwrap();
        let gb = buchberger(&[a, b], &B).unwrap();
        let names: Vec<String> = gb.iter().map(print_poly).collect();
        assert_eq!(names, ["x[1,1]", "x[1,2]"]);
    }

    #[test]
    fn two_minors_of_3x3_over_f2() {
        let m = build_matrix(f2(), MatrixKind::Symmetric, 3).unwrap();
        let gens = m.ideal_gens(2).unwrap();
        let gb = buchberger(&gens, &B).unwrap();
        for g in &gens {
            assert!(normal_form(g, &gb).unwrap().reduced_to_zero);
        }
        assert!(is_groebner_basis(&gb).unwrap());
    }

    #[test]
    fn membership_examples() {
        let m = build_matrix(Rationals, MatrixKind::Symmetric, 3).unwrap();
        let i2 = i_t(&m, 2);
        let f = parse_poly("x[1,2]^2 - x[1,1]*x[2,2]", m.ring()).unwrap();
        assert!(is_member(&f, &i2, &B).unwrap());
        let x11 = parse_poly("x[1,1]", m.ring()).unwrap();
        let pd = prime_p_data(&m, 2).unwrap();
        let p = Ideal::new(m.ring(), pd.gens.clone()).unwrap();
        let p2_plus = p.times(&p).unwrap().plus(&i2).unwrap();
        assert!(!is_member(&x11, &p2_plus, &B).unwrap());
    }

    #[test]
    fn witness_times_ideal_in_bracket_power() {
        let m = build_matrix(f2(), MatrixKind::Symmetric, 3).unwrap();
        let i2 = i_t(&m, 2);
        let bracket = bracket_power(&i2, 2).unwrap();
        let dp = diagonal_product(&m).unwrap();
        for g in i2.gens() {
            assert!(is_member(&dp.product.mul(g), &bracket, &B).unwrap());
        }
        let colon_ideal = colon(&bracket, &i2, &B).unwrap();
        assert!(is_member(&dp.product, &colon_ideal, &B).unwrap());
    }

    #[test]
    fn containment_examples() {
        let m = build_matrix(Rationals, MatrixKind::Symmetric, 3).unwrap();
        let i2 = i_t(&m, 2);
        assert!(ideal_contains(&i2, &i2, &B).unwrap());
        let pd = prime_p_data(&m, 2).unwrap();
        let p = Ideal::new(m.ring(), pd.gens.clone()).unwrap();
        let big = Ideal::principal(&pd.d).plus(&i2).unwrap();
        assert!(ideal_contains(&big, &p.times(&p).unwrap(), &B).unwrap());

        let m2 = build_matrix(f2(), MatrixKind::Symmetric, 2).unwrap();
        let dp = diagonal_product(&m2).unwrap();
        let max2 = frobenius_max_ideal(m2.ring(), 2);
        assert!(!ideal_contains(&max2, &Ideal::principal(&dp.product), &B).unwrap());
    }

    #[test]
    fn bracket_powers() {
        let r = sym_ring(f2(), 2);
        let f = parse_poly("x[1,1] + x[1,2]", &r).unwrap();
        let br = bracket_power(&Ideal::principal(&f), 2).unwrap();
        assert_eq!(br.gens(), &[parse_poly("x[1,1]^2 + x[1,2]^2", &r).unwrap()]);

        let r3 = sym_ring(PrimeField::new(3).unwrap(), 2);
        let det = parse_poly("x[1,1]*x[2,2] - x[1,2]^2", &r3).unwrap();
        let br = bracket_power(&Ideal::principal(&det), 3).unwrap();
        assert_eq!(br.gens(), &[det.pow_by_squaring(3)]);

        assert!(bracket_power(&Ideal::principal(&det), 6).is_err());
        let rq = sym_ring(Rationals, 2);
        assert!(bracket_power(&Ideal::principal(&rq.var(0)), 2).is_err());
    }

    #[test]
    fn principal_colons() {
        let r3 = sym_ring(PrimeField::new(3).unwrap(), 2);
        let det = parse_poly("x[1,1]*x[2,2] - x[1,2]^2", &r3).unwrap();
        let c = colon(&Ideal::principal(&det.pow(3)), &Ideal::principal(&det), &B).unwrap();
        assert!(ideal_eq(&c, &Ideal::principal(&det.pow(2)), &B).unwrap());

        let r = sym_ring(Rationals, 2);
        let i = Ideal::new(&r, vec![parse_poly("x[1,1]^2", &r).unwrap(), parse_poly("x[1,1]*x[1,2]", &r).unwrap()]).unwrap();
        let c = colon_by(&i, &r.var(0), &B).unwrap();
        let expect = Ideal::new(&r, vec![r.var(0), r.var(1)]).unwrap();
        assert!(ideal_eq(&c, &expect, &B).unwrap());
        assert!(colon(&i, &Ideal::zero(&r), &B).is_err());
    }

    #[test]
    fn saturation() {
        let r = sym_ring(Rationals, 2);
        let i = Ideal::principal(&parse_poly("x[1,1]*x[1,2]", &r).unwrap());
        let s = saturate(&i, &r.var(0), &B).unwrap();
        assert!(ideal_eq(&s, &Ideal::principal(&r.var(1)), &B).unwrap());
        let same = saturate(&i, &r.one(), &B).unwrap();
        assert!(ideal_eq(&same, &i, &B).unwrap());
    }

    #[test]
    fn radicals() {
        let m = build_matrix(Rationals, MatrixKind::Symmetric, 3).unwrap();
        let r = m.ring();
        let base = Ideal::principal(&r.var(0)).plus(&i_t(&m, 2)).unwrap();
        assert!(radical_member(&parse_poly("x[1,2]", r).unwrap(), &base, &B).unwrap());
        assert!(!radical_member(&parse_poly("x[2,2]", r).unwrap(), &base, &B).unwrap());
        let f = parse_poly("x[1,1]*x[2,3] + x[3,3]", r).unwrap();
        assert!(radical_member(&f, &Ideal::principal(&f), &B).unwrap());
    }

    #[test]
    fn frobenius_max_membership() {
        let m = build_matrix(PrimeField::new(3).unwrap(), MatrixKind::Symmetric, 2).unwrap();
        let dp = diagonal_product(&m).unwrap();
        assert!(outside_frobenius_max(&dp.product.pow(2), 3));
        let r = m.ring();
        assert!(!outside_frobenius_max(&r.var(0).pow(3), 3));
        assert!(outside_frobenius_max(&r.from_i64(2), 3));
    }

    #[test]
    fn timeouts_surface_as_errors() {
        let m = build_matrix(Rationals, MatrixKind::Symmetric, 3).unwrap();
        let expired = Budget::within(std::time::Duration::ZERO);
        assert_eq!(buchberger(m.ideal_gens(2).unwrap().as_slice(), &expired), Err(crate::Error::Timeout));
    }
}
