//! The registry of exact identities among the equitable generators of U.
//!
//! Each entry is a pair of elements that must agree in PBW normal form.
//! The registry drives three independent consumers: the symbolic identity
//! suite (zero residual over Q(q)), the numeric module oracle (equal
//! matrices on the modules L(n, eps) at rational q), and the CLI.

use crate::coeff::RatQ;
use crate::uqsl2::{UElement, UGen};

/// A named exact identity `lhs == rhs` in U.
#[derive(Clone, Debug)]
pub struct Identity {
    pub id: String,
    pub lhs: UElement,
    pub rhs: UElement,
}

impl Identity {
    fn new(id: &str, lhs: UElement, rhs: UElement) -> Self {
        Identity { id: id.to_string(), lhs, rhs }
    }

    pub fn residual(&self) -> UElement {
        self.lhs.sub(&self.rhs)
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }
}

fn x() -> UElement {
    UElement::named(UGen::X)
}

fn y() -> UElement {
    UElement::named(UGen::Y)
}

fn yi() -> UElement {
    UElement::named(UGen::YInv)
}

fn z() -> UElement {
    UElement::named(UGen::Z)
}

fn nx() -> UElement {
    UElement::named(UGen::NuX)
}

fn ny() -> UElement {
    UElement::named(UGen::NuY)
}

fn nz() -> UElement {
    UElement::named(UGen::NuZ)
}

fn lam() -> UElement {
    UElement::named(UGen::Lambda)
}

fn one() -> UElement {
    UElement::one()
}

fn s(c: RatQ) -> UElement {
    UElement::scalar(c)
}

fn q() -> RatQ {
    RatQ::q()
}

fn qi() -> RatQ {
    RatQ::q_pow(-1)
}

fn qm() -> RatQ {
    RatQ::q_minus_q_inv()
}

fn qp() -> RatQ {
    RatQ::q_plus_q_inv()
}

/// `(q u v - q^-1 v u) / (q - q^-1)`.
fn q_weighted_comm(u: &UElement, v: &UElement) -> UElement {
    (u * v).scale(&q()).sub(&(v * u).scale(&qi())).scale(&qm().inv())
}

/// `(u v - v u) / (q - q^-1)`.
fn norm_comm(u: &UElement, v: &UElement) -> UElement {
    (u * v).sub(&(v * u)).scale(&qm().inv())
}

/// The three defining relations of the equitable presentation.
fn equitable_relations(out: &mut Vec<Identity>) {
    out.push(Identity::new("equit.yyinv", y() * yi(), one()));
    out.push(Identity::new("equit.xy", q_weighted_comm(&x(), &y()), one()));
    out.push(Identity::new("equit.yz", q_weighted_comm(&y(), &z()), one()));
    out.push(Identity::new("equit.zx", q_weighted_comm(&z(), &x()), one()));
}

/// The six expressions equal to the normalized Casimir element.
fn sixforms(out: &mut Vec<Identity>) {
    let forms: [(&str, UElement); 6] = [
        ("sixforms.y_minus", x().scale(&q()) + y().scale(&qi()) + z().scale(&q()) - (x() * y() * z()).scale(&q())),
        ("sixforms.y_plus", x().scale(&qi()) + y().scale(&q()) + z().scale(&qi()) - (z() * y() * x()).scale(&qi())),
        ("sixforms.z_minus", y().scale(&q()) + z().scale(&qi()) + x().scale(&q()) - (y() * z() * x()).scale(&q())),
        ("sixforms.z_plus", y().scale(&qi()) + z().scale(&q()) + x().scale(&qi()) - (x() * z() * y()).scale(&qi())),
        ("sixforms.x_minus", z().scale(&q()) + x().scale(&qi()) + y().scale(&q()) - (z() * x() * y()).scale(&q())),
        ("sixforms.x_plus", z().scale(&qi()) + x().scale(&q()) + y().scale(&qi()) - (y() * x() * z()).scale(&qi())),
    ];
    for (id, rhs) in forms {
        out.push(Identity::new(id, lam(), rhs));
    }
}

/// Pair products of equitable generators against the nu elements.
fn products(out: &mut Vec<Identity>) {
    out.push(Identity::new("prod.xy", x() * y(), one() - nz().scale(&qi())));
    out.push(Identity::new("prod.yx", y() * x(), one() - nz().scale(&q())));
    out.push(Identity::new("prod.yz", y() * z(), one() - nx().scale(&qi())));
    out.push(Identity::new("prod.zy", z() * y(), one() - nx().scale(&q())));
    out.push(Identity::new("prod.zx", z() * x(), one() - ny().scale(&qi())));
    out.push(Identity::new("prod.xz", x() * z(), one() - ny().scale(&q())));
}

/// Commutators and reversed q-commutators of the generator pairs.
fn doubles(out: &mut Vec<Identity>) {
    let mk = |u: &UElement, v: &UElement| (u * v - v * u).scale(&qm().inv());
    let rk = |u: &UElement, v: &UElement| {
        ((v * u).scale(&q()) - (u * v).scale(&qi())).scale(&qm().inv())
    };
    out.push(Identity::new("double.xy", mk(&x(), &y()), nz()));
    out.push(Identity::new("double.xy_rev", rk(&x(), &y()), one() - nz().scale(&qp())));
    out.push(Identity::new("double.yz", mk(&y(), &z()), nx()));
    out.push(Identity::new("double.yz_rev", rk(&y(), &z()), one() - nx().scale(&qp())));
    out.push(Identity::new("double.zx", mk(&z(), &x()), ny()));
    out.push(Identity::new("double.zx_rev", rk(&z(), &x()), one() - ny().scale(&qp())));
}

/// q-commutation of each generator with the adjacent nu elements.
fn qcom(out: &mut Vec<Identity>) {
    out.push(Identity::new("qcom.x_ny", x() * ny(), (ny() * x()).scale(&RatQ::q_pow(2))));
    out.push(Identity::new("qcom.x_nz", x() * nz(), (nz() * x()).scale(&RatQ::q_pow(-2))));
    out.push(Identity::new("qcom.y_nz", y() * nz(), (nz() * y()).scale(&RatQ::q_pow(2))));
    out.push(Identity::new("qcom.y_nx", y() * nx(), (nx() * y()).scale(&RatQ::q_pow(-2))));
    out.push(Identity::new("qcom.z_nx", z() * nx(), (nx() * z()).scale(&RatQ::q_pow(2))));
    out.push(Identity::new("qcom.z_ny", z() * ny(), (ny() * z()).scale(&RatQ::q_pow(-2))));
}

/// Products of a generator with its own nu element against the Casimir.
fn xvx(out: &mut Vec<Identity>) {
    out.push(Identity::new("xvx.nx_x", nx() * x(), lam() - y().scale(&q()) - z().scale(&qi())));
    out.push(Identity::new("xvx.x_nx", x() * nx(), lam() - y().scale(&qi()) - z().scale(&q())));
    out.push(Identity::new("xvx.ny_y", ny() * y(), lam() - z().scale(&q()) - x().scale(&qi())));
    out.push(Identity::new("xvx.y_ny", y() * ny(), lam() - z().scale(&qi()) - x().scale(&q())));
    out.push(Identity::new("xvx.nz_z", nz() * z(), lam() - x().scale(&q()) - y().scale(&qi())));
    out.push(Identity::new("xvx.z_nz", z() * nz(), lam() - x().scale(&qi()) - y().scale(&q())));
}

/// Normalized commutators of a generator with its own nu element.
fn xnxcom(out: &mut Vec<Identity>) {
    out.push(Identity::new("xnxcom.x", norm_comm(&x(), &nx()), y() - z()));
    out.push(Identity::new("xnxcom.y", norm_comm(&y(), &ny()), z() - x()));
    out.push(Identity::new("xnxcom.z", norm_comm(&z(), &nz()), x() - y()));
}

/// Six more expressions for the Casimir via weighted commutators.
fn dcas(out: &mut Vec<Identity>) {
    let mk = |u: &UElement, v: &UElement, w: &UElement| {
        q_weighted_comm(u, v) + w.scale(&qp())
    };
    out.push(Identity::new("dcas.1a", lam(), mk(&x(), &nx(), &z())));
    out.push(Identity::new("dcas.1b", lam(), mk(&nx(), &x(), &y())));
    out.push(Identity::new("dcas.2a", lam(), mk(&y(), &ny(), &x())));
    out.push(Identity::new("dcas.2b", lam(), mk(&ny(), &y(), &z())));
    out.push(Identity::new("dcas.3a", lam(), mk(&z(), &nz(), &y())));
    out.push(Identity::new("dcas.3b", lam(), mk(&nz(), &z(), &x())));
}

/// Products of distinct nu elements.
fn nxny(out: &mut Vec<Identity>) {
    let quad = |w: &UElement, c1: RatQ, c2: RatQ| one() - (lam() * w).scale(&c1) + (w * w).scale(&c2);
    out.push(Identity::new("nxny.xy", nx() * ny(), quad(&z(), qi(), RatQ::q_pow(-2))));
    out.push(Identity::new("nxny.yx", ny() * nx(), quad(&z(), q(), RatQ::q_pow(2))));
    out.push(Identity::new("nxny.yz", ny() * nz(), quad(&x(), qi(), RatQ::q_pow(-2))));
    out.push(Identity::new("nxny.zy", nz() * ny(), quad(&x(), q(), RatQ::q_pow(2))));
    out.push(Identity::new("nxny.zx", nz() * nx(), quad(&y(), qi(), RatQ::q_pow(-2))));
    out.push(Identity::new("nxny.xz", nx() * nz(), quad(&y(), q(), RatQ::q_pow(2))));
}

/// Weighted commutators of distinct nu elements.
fn comnxny(out: &mut Vec<Identity>) {
    out.push(Identity::new("comnxny.xy", q_weighted_comm(&nx(), &ny()), one() - z() * z()));
    out.push(Identity::new("comnxny.yz", q_weighted_comm(&ny(), &nz()), one() - x() * x()));
    out.push(Identity::new("comnxny.zx", q_weighted_comm(&nz(), &nx()), one() - y() * y()));
}

/// `e^t f^t` as an ordered product of Casimir factors, t = 1..4.
fn casimir_products(out: &mut Vec<Identity>) {
    let d = (&qm() * &qm()).inv();
    for t in 1..=4u32 {
        let lhs = UElement::gen_e().pow(t).mul(&UElement::gen_f().pow(t));
        let mut rhs = UElement::one();
        for i in 1..=t as i64 {
            let factor = lam()
                .sub(&UElement::k_pow(1).scale(&RatQ::q_pow(1 - 2 * i)))
                .sub(&UElement::k_pow(-1).scale(&RatQ::q_pow(2 * i - 1)))
                .scale(&d);
            rhs = rhs.mul(&factor);
        }
        out.push(Identity::new(&format!("ident.t{}", t), lhs, rhs));
    }
}

/// Auxiliary cubic identities used when reducing the Casimir image.
fn cubic_auxiliaries(out: &mut Vec<Identity>) {
    let qq = RatQ::q_pow(2);
    let qqi = RatQ::q_pow(-2);
    out.push(Identity::new(
        "aux.nzz2",
        nz() * z() * z(),
        nx().scale(&qqi) + ny().scale(&qq) + lam() * z() - s(qp()),
    ));
    out.push(Identity::new(
        "aux.xnxx",
        x() * nx() * x(),
        ny() + nz() + lam() * x() - s(qp()),
    ));
    out.push(Identity::new(
        "aux.y2ny",
        y() * y() * ny(),
        nx().scale(&qqi) + nz().scale(&qq) + lam() * y() - s(qp()),
    ));
    out.push(Identity::new(
        "aux.nznxny",
        nz() * nx() * ny(),
        nx().scale(&RatQ::q_pow(-4))
            + ny()
            + nz()
            + lam() * x()
            + (lam() * y()).scale(&qqi)
            + (lam() * z()).scale(&qqi)
            - (lam() * lam()).scale(&qi())
            - s(qi() + RatQ::q_pow(-3)),
    ));
    out.push(Identity::new(
        "aux.sym_xy",
        x() * y() + y() * x(),
        s(RatQ::from_int(2)) - nz().scale(&qp()),
    ));
    out.push(Identity::new(
        "aux.sym_yz",
        y() * z() + z() * y(),
        s(RatQ::from_int(2)) - nx().scale(&qp()),
    ));
    out.push(Identity::new(
        "aux.sym_zx",
        z() * x() + x() * z(),
        s(RatQ::from_int(2)) - ny().scale(&qp()),
    ));
}

/// Centrality of the normalized Casimir element.
fn casimir_central(out: &mut Vec<Identity>) {
    let gens: [(&str, UElement); 6] = [
        ("e", UElement::gen_e()),
        ("f", UElement::gen_f()),
        ("k", y()),
        ("x", x()),
        ("z", z()),
        ("ny", ny()),
    ];
    for (name, g) in gens {
        out.push(Identity::new(&format!("central.lambda_{}", name), lam() * &g, g * lam()));
    }
}

/// Build the full identity registry.
pub fn registry() -> Vec<Identity> {
    let mut out = Vec::new();
    equitable_relations(&mut out);
    sixforms(&mut out);
    products(&mut out);
    doubles(&mut out);
    qcom(&mut out);
    xvx(&mut out);
    xnxcom(&mut out);
    dcas(&mut out);
    nxny(&mut out);
    comnxny(&mut out);
    casimir_products(&mut out);
    cubic_auxiliaries(&mut out);
    casimir_central(&mut out);
    out
}

/// Look an identity up by id.
pub fn find(id: &str) -> Option<Identity> {
    registry().into_iter().find(|i| i.id == id)
}

/// One row of the homogeneous-component table: an element together with
/// its projections for degrees -1, 0, 1 (all other components vanish).
#[derive(Clone, Debug)]
pub struct GradedRow {
    pub id: String,
    pub element: UElement,
    pub minus_one: UElement,
    pub zero: UElement,
    pub plus_one: UElement,
}

impl GradedRow {
    /// Expected component for an arbitrary degree.
    pub fn expected(&self, n: i64) -> UElement {
        match n {
            -1 => self.minus_one.clone(),
            0 => self.zero.clone(),
            1 => self.plus_one.clone(),
            _ => UElement::zero(),
        }
    }
}

/// The table of homogeneous components of the seven basic elements.
pub fn graded_table() -> Vec<GradedRow> {
    let zero = UElement::zero;
    let yinv = UElement::k_pow(-1);
    let yinv2 = UElement::k_pow(-2);
    vec![
        GradedRow {
            id: "graded.x".into(),
            element: x(),
            minus_one: zero(),
            zero: yinv.clone(),
            plus_one: (nz() * &yinv).scale(&-qi()),
        },
        GradedRow {
            id: "graded.y".into(),
            element: y(),
            minus_one: zero(),
            zero: y(),
            plus_one: zero(),
        },
        GradedRow {
            id: "graded.z".into(),
            element: z(),
            minus_one: (&yinv * nx()).scale(&-qi()),
            zero: yinv.clone(),
            plus_one: zero(),
        },
        GradedRow {
            id: "graded.nx".into(),
            element: nx(),
            minus_one: nx(),
            zero: zero(),
            plus_one: zero(),
        },
        GradedRow {
            id: "graded.ny".into(),
            element: ny(),
            minus_one: (&yinv2 * nx()).scale(&RatQ::q_pow(-2)),
            zero: (&yinv * lam()) - yinv2.scale(&qp()),
            plus_one: (nz() * &yinv2).scale(&RatQ::q_pow(-2)),
        },
        GradedRow {
            id: "graded.nz".into(),
            element: nz(),
            minus_one: zero(),
            zero: zero(),
            plus_one: nz(),
        },
        GradedRow {
            id: "graded.lambda".into(),
            element: lam(),
            minus_one: zero(),
            zero: lam(),
            plus_one: zero(),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_registry_holds() {
        for ident in registry() {
            assert!(
                ident.holds(),
                "identity {} has residual {}",
                ident.id,
                ident.residual()
            );
        }
    }

    #[test]
    fn graded_table_holds() {
        for row in graded_table() {
            for n in -2..=2 {
                assert_eq!(
                    row.element.grade_project(n),
                    row.expected(n),
                    "row {} degree {}",
                    row.id,
                    n
                );
            }
            // the three listed components exhaust the element
            let sum = row.minus_one.add(&row.zero).add(&row.plus_one);
            assert_eq!(sum, row.element, "row {} components must sum back", row.id);
        }
    }

    #[test]
    fn mutated_identity_is_detected() {
        // flipping a sign in a relation must produce a nonzero residual
        let ident = find("prod.xy").unwrap();
        let mutated = Identity {
            id: ident.id.clone(),
            lhs: ident.lhs.clone(),
            rhs: UElement::one().add(&UElement::named(UGen::NuZ).scale(&RatQ::q_pow(-1))),
        };
        assert!(!mutated.holds(), "sign flip must be detected");
    }
}
