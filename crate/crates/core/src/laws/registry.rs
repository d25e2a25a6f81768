use std::sync::OnceLock;

use super::native;
use super::{formula_uses_star, parse_formula, AxiomGroup, Check, Law, NativeCheck, Polarity, VarKind, Variable};
use crate::term::parse_term;

use AxiomGroup::*;

struct Def {
    id: &'static str,
    anchor: &'static str,
    text: &'static str,
    group: Option<AxiomGroup>,
    native: Option<(&'static [&'static str], NativeCheck, bool)>,
    bias: &'static [(&'static str, &'static str)],
    witness: Option<&'static str>,
    discrepancy: Option<&'static str>,
}

const fn valid(id: &'static str, anchor: &'static str, text: &'static str) -> Def {
    Def { id, anchor, text, group: None, native: None, bias: &[], witness: None, discrepancy: None }
}

const fn axiom(group: AxiomGroup, id: &'static str, anchor: &'static str, text: &'static str) -> Def {
    Def { group: Some(group), ..valid(id, anchor, text) }
}

const fn biased(
    id: &'static str,
    anchor: &'static str,
    text: &'static str,
    bias: &'static [(&'static str, &'static str)],
) -> Def {
    Def { bias, ..valid(id, anchor, text) }
}

const fn refutable(id: &'static str, anchor: &'static str, text: &'static str, witness: &'static str) -> Def {
    Def { witness: Some(witness), ..valid(id, anchor, text) }
}

const fn native(
    id: &'static str,
    anchor: &'static str,
    vars: &'static [&'static str],
    f: NativeCheck,
    uses_star: bool,
) -> Def {
    Def { native: Some((vars, f, uses_star)), ..valid(id, anchor, "") }
}

const fn noted(def: Def, discrepancy: &'static str) -> Def {
    Def { discrepancy: Some(discrepancy), ..def }
}

const fn grouped(def: Def, group: AxiomGroup) -> Def {
    Def { group: Some(group), ..def }
}

// Stored counterexamples, in the environment file format.

const W_RIGHT_ANNIHILATION: &str = "universe a\nrel x\na -> {}\nend\n";

const W_SEQ_ASSOC: &str = "universe a b\n\
rel x\na -> { a }\na -> { a, b }\nb -> { a }\nend\n\
rel y\na -> { a }\na -> { a, b }\nb -> { a }\nend\n\
rel z\na -> { a }\na -> { b }\nend\n";

const W_SEQ_ASSOC_CUBE: &str = "universe a b c\n\
rel x\na -> { c }\nb -> { a, c }\nc -> { b }\nc -> { c }\nend\n";

const W_LEFT_DISTR: &str = "universe a b\n\
rel x\na -> { a, b }\nend\n\
rel y\na -> { a }\nend\n\
rel z\nb -> { b }\nend\n";

const W_INTERACTION: &str = "universe a b\n\
rel x\na -> { a }\nend\n\
rel y\na -> { a }\nend\n\
rel z\na -> { a }\na -> { b }\nend\n";

const W_ADDITIVITY: &str = "universe a b\n\
rel x\na -> { a, b }\nend\n\
rel p\na -> { a }\nend\n\
rel q\nb -> { b }\nend\n";

const W_STRICTNESS: &str = "universe a\nrel x\na -> {}\nend\n";

const W_CONJUGATION: &str = "universe a\n\
rel x\na -> {}\nend\n\
rel p\na -> { a }\nend\n\
rel q\na -> { a }\nend\n";

const W_FUSION: &str = "universe a b\n\
rel x\na -> { a }\na -> { a, b }\nb -> { a }\nend\n\
rel y\na -> { a }\na -> { b }\nend\n";

const W_SEGERBERG: &str = "universe a b c\n\
rel x\na -> { b, c }\nb -> { b }\nb -> { c }\nc -> { c }\nend\n\
rel p\nc -> { c }\nend\n";

const W_SEGERBERG_BOX: &str = "universe a b c\n\
rel x\na -> { b, c }\nb -> { b }\nb -> { c }\nc -> { c }\nend\n\
rel p\na -> { a }\nb -> { b }\nend\n";

const W_BOX_PAR: &str = "universe a\n\
rel x\na -> { a }\nend\n\
rel y\na -> {}\nend\n\
rel p\na -> { a }\nend\n";

const INDUCTION_BIAS: &[(&str, &str)] = &[("y", "bstar(x, d(z) + y)")];
const AP_INDUCTION_BIAS: &[(&str, &str)] = &[("y", "bstar(x, a(z) + y)")];
const JOIN_BIAS: &[(&str, &str)] = &[("y", "x + y")];

const UNFOLD_NOTE: &str = "the printed unit 1σ in the unfold law is read as p; the literal form fails";

fn definitions() -> Vec<Def> {
    vec![
        // Proto-trioid axioms.
        axiom(ProtoSeq, "proto.plus_assoc", "additive associativity: x+(y+z) = (x+y)+z", "x + (y + z) = (x + y) + z"),
        axiom(ProtoSeq, "proto.plus_comm", "additive commutativity: x+y = y+x", "x + y = y + x"),
        axiom(ProtoSeq, "proto.plus_zero", "additive unit: x+0 = x", "x + 0 = x"),
        axiom(ProtoSeq, "proto.plus_idem", "additive idempotence: x+x = x", "x + x = x"),
        axiom(ProtoSeq, "proto.seq_left_unit", "sequential left unit: 1σ·x = x", "1s ; x = x"),
        axiom(ProtoSeq, "proto.seq_right_unit", "sequential right unit: x·1σ = x", "x ; 1s = x"),
        axiom(
            ProtoSeq,
            "proto.left_subdistr",
            "left subdistributivity: x·y+x·z ≤ x·(y+z)",
            "x ; y + x ; z <= x ; (y + z)",
        ),
        axiom(ProtoSeq, "proto.right_distr", "right distributivity: (x+y)·z = x·z+y·z", "(x + y) ; z = x ; z + y ; z"),
        axiom(ProtoSeq, "proto.seq_left_zero", "left annihilation: 0·x = 0", "0 ; x = 0"),
        axiom(ProtoPar, "proto.par_assoc", "parallel associativity: x‖(y‖z) = (x‖y)‖z", "x || (y || z) = (x || y) || z"),
        axiom(ProtoPar, "proto.par_comm", "parallel commutativity: x‖y = y‖x", "x || y = y || x"),
        axiom(ProtoPar, "proto.par_unit", "parallel unit: 1π‖x = x", "1p || x = x"),
        noted(
            axiom(ProtoPar, "proto.par_distr", "parallel distributivity: x‖(y+z) = x‖y+x‖z", "x || (y + z) = x || y + x || z"),
            "listed with a sequential right-hand side x·y+x·z; the parallel reading is the dioid law",
        ),
        axiom(ProtoPar, "proto.par_zero", "parallel annihilation: 0‖x = 0", "0 || x = 0"),
        // Domain axioms.
        axiom(DomainSeq, "dp.assoc_left", "domain associativity: d(x)·(y·z) = (d(x)·y)·z", "d(x) ; (y ; z) = (d(x) ; y) ; z"),
        axiom(DomainSeq, "dp.assoc_mid", "domain associativity: x·(d(y)·z) = (x·d(y))·z", "x ; (d(y) ; z) = (x ; d(y)) ; z"),
        axiom(DomainSeq, "dp.assoc_right", "domain associativity: x·(y·d(z)) = (x·y)·d(z)", "x ; (y ; d(z)) = (x ; y) ; d(z)"),
        axiom(DomainSeq, "dp.left_preservation", "left preservation: x ≤ d(x)·x", "x <= d(x) ; x"),
        axiom(DomainSeq, "dp.locality", "domain locality: d(x·y) = d(x·d(y))", "d(x ; y) = d(x ; d(y))"),
        axiom(DomainSeq, "dp.additivity", "domain additivity: d(x+y) = d(x)+d(y)", "d(x + y) = d(x) + d(y)"),
        axiom(DomainSeq, "dp.subidentity", "domain subidentity: d(x) ≤ 1σ", "d(x) <= 1s"),
        axiom(DomainSeq, "dp.strictness", "domain strictness: d(0) = 0", "d(0) = 0"),
        axiom(
            DomainPar,
            "dp.interaction",
            "domain interaction: (x‖y)·d(z) = (x·d(z))‖(y·d(z))",
            "(x || y) ; d(z) = x ; d(z) || y ; d(z)",
        ),
        axiom(DomainPar, "dp.par_domain", "domain concurrency: d(x‖y) = d(x)·d(y)", "d(x || y) = d(x) ; d(y)"),
        axiom(DomainPar, "dp.par_meet", "domain concurrency: d(x)‖d(y) = d(x)·d(y)", "d(x) || d(y) = d(x) ; d(y)"),
        axiom(DomainStar, "dp.star_unfold", "left star unfold: 1σ+x·x* ≤ x*", "1s + x ; x^* <= x^*"),
        grouped(
            biased(
                "dp.star_induction",
                "left star induction: d(z)+x·y ≤ y ⇒ x*·d(z) ≤ y",
                "d(z) + x ; y <= y => x^* ; d(z) <= y",
                INDUCTION_BIAS,
            ),
            DomainStar,
        ),
        // Antidomain axioms.
        axiom(AntidomainSeq, "ap.assoc_left", "antidomain associativity: a(x)·(y·z) = (a(x)·y)·z", "a(x) ; (y ; z) = (a(x) ; y) ; z"),
        axiom(AntidomainSeq, "ap.assoc_mid", "antidomain associativity: x·(a(y)·z) = (x·a(y))·z", "x ; (a(y) ; z) = (x ; a(y)) ; z"),
        axiom(AntidomainSeq, "ap.assoc_right", "antidomain associativity: x·(y·a(z)) = (x·y)·a(z)", "x ; (y ; a(z)) = (x ; y) ; a(z)"),
        axiom(AntidomainSeq, "ap.left_annihilation", "antidomain left annihilation: a(x)·x = 0", "a(x) ; x = 0"),
        axiom(AntidomainSeq, "ap.locality", "antidomain locality: a(x·y) = a(x·a(a(y)))", "a(x ; y) = a(x ; a(a(y)))"),
        axiom(AntidomainSeq, "ap.complementation", "complementation: a(x)+a(a(x)) = 1σ", "a(x) + a(a(x)) = 1s"),
        axiom(
            AntidomainSeq,
            "ap.left_distr",
            "antidomain left distributivity: a(x)·(y+z) = a(x)·y+a(x)·z",
            "a(x) ; (y + z) = a(x) ; y + a(x) ; z",
        ),
        axiom(
            AntidomainPar,
            "ap.interaction",
            "antidomain interaction: (x‖y)·a(z) = (x·a(z))‖(y·a(z))",
            "(x || y) ; a(z) = x ; a(z) || y ; a(z)",
        ),
        axiom(AntidomainPar, "ap.par_antidomain", "antidomain concurrency: a(x‖y) = a(x)+a(y)", "a(x || y) = a(x) + a(y)"),
        axiom(AntidomainPar, "ap.par_meet", "antidomain concurrency: a(x)‖a(y) = a(x)·a(y)", "a(x) || a(y) = a(x) ; a(y)"),
        axiom(AntidomainStar, "ap.star_unfold", "left star unfold: 1σ+x·x* ≤ x*", "1s + x ; x^* <= x^*"),
        grouped(
            biased(
                "ap.star_induction",
                "left star induction: a(z)+x·y ≤ y ⇒ x*·a(z) ≤ y",
                "a(z) + x ; y <= y => x^* ; a(z) <= y",
                AP_INDUCTION_BIAS,
            ),
            AntidomainStar,
        ),
        // Sequential and parallel composition.
        valid("seq.weak_assoc", "weak associativity: (x·y)·z ≤ x·(y·z)", "(x ; y) ; z <= x ; (y ; z)"),
        biased("seq.right_isotone", "isotonicity: x ≤ y ⇒ z·x ≤ z·y", "x <= y => z ; x <= z ; y", JOIN_BIAS),
        biased("seq.left_isotone", "isotonicity: x ≤ y ⇒ x·z ≤ y·z", "x <= y => x ; z <= y ; z", JOIN_BIAS),
        valid("seq.universal_top", "universal multirelation is greatest: x ≤ U", "x <= U"),
        valid("par.interaction", "interaction: (x‖y)·z ≤ (x·z)‖(y·z)", "(x || y) ; z <= x ; z || y ; z"),
        biased("par.isotone", "isotonicity: x ≤ y ⇒ z‖x ≤ z‖y", "x <= y => z || x <= z || y", JOIN_BIAS),
        // Subidentities.
        native(
            "subid.input_restriction",
            "input restriction: (a,A) ∈ p·x ⇔ (a,{a}) ∈ p ∧ (a,A) ∈ x",
            &["x", "p"],
            native::input_restriction,
            false,
        ),
        native(
            "subid.output_restriction",
            "output restriction: (a,A) ∈ x·p ⇔ (a,A) ∈ x ∧ {(b,{b}) | b ∈ A} ⊆ p",
            &["x", "p"],
            native::output_restriction,
            false,
        ),
        valid("subid.assoc_left", "subidentity associativity: p·(y·z) = (p·y)·z", "p ; (y ; z) = (p ; y) ; z"),
        valid("subid.assoc_mid", "subidentity associativity: x·(p·z) = (x·p)·z", "x ; (p ; z) = (x ; p) ; z"),
        valid("subid.assoc_right", "subidentity associativity: x·(y·p) = (x·y)·p", "x ; (y ; p) = (x ; y) ; p"),
        valid("subid.interaction", "subidentity interaction: (x‖y)·p = (x·p)‖(y·p)", "(x || y) ; p = x ; p || y ; p"),
        valid("subid.left_distr", "subidentity left distributivity: p·(y+z) = p·y+p·z", "p ; (y + z) = p ; y + p ; z"),
        valid("subid.meet", "subidentity meet: p·q = p‖q", "p ; q = p || q"),
        valid("subid.seq_comm", "subidentity commutativity: p·q = q·p", "p ; q = q ; p"),
        valid("subid.seq_idem", "subidentity idempotence: p·p = p", "p ; p = p"),
        valid("subid.complement", "subidentity complement: p+a(p) = 1σ ∧ p·a(p) = 0", "p + a(p) = 1s & p ; a(p) = 0"),
        valid("subid.right_zero", "subidentity right annihilation: p·0 = 0", "p ; 0 = 0"),
        // Domain.
        valid("dom.retraction", "domain retraction: d(d(x)) = d(x)", "d(d(x)) = d(x)"),
        valid("dom.fixpoints", "domain elements are the subidentities: d(p) = p", "d(p) = p"),
        valid("dom.left_preservation_eq", "left preservation: d(x)·x = x", "d(x) ; x = x"),
        biased("dom.isotone", "domain isotonicity: x ≤ y ⇒ d(x) ≤ d(y)", "x <= y => d(x) <= d(y)", JOIN_BIAS),
        valid("dom.seq_le", "domain of composition: d(x·y) ≤ d(x)", "d(x ; y) <= d(x)"),
        biased("dom.subid_le", "subidentity domain: x ≤ 1σ ⇒ x ≤ d(x)", "x <= 1s => x <= d(x)", &[("x", "d(x)")]),
        valid("dom.export", "domain export: d(d(x)·y) = d(x)·d(y)", "d(d(x) ; y) = d(x) ; d(y)"),
        valid("dom.unit", "domain of the unit: d(1σ) = 1σ", "d(1s) = 1s"),
        valid("dom.seq_comm", "domain elements commute: d(x)·d(y) = d(y)·d(x)", "d(x) ; d(y) = d(y) ; d(x)"),
        valid("dom.seq_idem", "domain idempotence: d(x)·d(x) = d(x)", "d(x) ; d(x) = d(x)"),
        valid("dom.absorption", "domain absorption: d(x)·(d(x)+d(y)) = d(x)", "d(x) ; (d(x) + d(y)) = d(x)"),
        valid(
            "dom.lattice_distr",
            "domain distributivity: d(x)+d(y)·d(z) = (d(x)+d(y))·(d(x)+d(z))",
            "d(x) + d(y) ; d(z) = (d(x) + d(y)) ; (d(x) + d(z))",
        ),
        biased(
            "dom.least_left_preservation",
            "least left preservation: x ≤ d(y)·x ⇔ d(x) ≤ d(y)",
            "x <= d(y) ; x <=> d(x) <= d(y)",
            JOIN_BIAS,
        ),
        valid("dom.right_zero", "domain right annihilation: d(x)·0 = 0", "d(x) ; 0 = 0"),
        biased("dom.zero_iff", "domain strictness: d(x) = 0 ⇔ x = 0", "d(x) = 0 <=> x = 0", &[("x", "a(x) ; x")]),
        valid("dom.join_le", "domain isotonicity in joins: d(x) ≤ d(x+y)", "d(x) <= d(x + y)"),
        valid("dom.par_unit", "domain of the parallel unit: d(1π) = 1σ", "d(1p) = 1s"),
        valid("dom.par", "domain of parallel composition: d(x‖y) = d(x)‖d(y)", "d(x || y) = d(x) || d(y)"),
        valid("dom.par_closed", "parallel closure of domain elements: d(d(x)‖d(y)) = d(x)‖d(y)", "d(d(x) || d(y)) = d(x) || d(y)"),
        valid("dom.par_idem", "parallel idempotence of domain elements: d(x)‖d(x) = d(x)", "d(x) || d(x) = d(x)"),
        biased(
            "dom.complemented",
            "complemented elements are domain elements: x+y = 1σ ∧ y·x = 0 ⇒ d(x) = x",
            "x + y = 1s & y ; x = 0 => d(x) = x",
            &[("x", "d(x)"), ("y", "a(x)")],
        ),
        // Antidomain.
        native(
            "antidom.complement_formula",
            "antidomain as complement: a(x) = 1σ ∩ −d(x)",
            &["x"],
            native::antidomain_complement,
            false,
        ),
        valid("antidom.double", "domain from antidomain: a(a(x)) = d(x)", "a(a(x)) = d(x)"),
        valid("antidom.domain", "antidomain elements are domain elements: d(a(x)) = a(x)", "d(a(x)) = a(x)"),
        valid("antidom.locality_domain", "antidomain locality: a(x·y) = a(x·d(y))", "a(x ; y) = a(x ; d(y))"),
        valid("antidom.complement", "antidomain complement: a(x)+d(x) = 1σ", "a(x) + d(x) = 1s"),
        valid("antidom.disjoint", "antidomain disjointness: a(x)·d(x) = 0", "a(x) ; d(x) = 0"),
        valid("antidom.additivity", "antidomain of a sum: a(x+y) = a(x)·a(y)", "a(x + y) = a(x) ; a(y)"),
        valid("antidom.subidentity", "antidomain subidentity: a(x) ≤ 1σ", "a(x) <= 1s"),
        valid("antidom.idem", "antidomain idempotence: a(x)·a(x) = a(x)", "a(x) ; a(x) = a(x)"),
        biased("antidom.unit_iff", "antidomain co-strictness: a(x) = 1σ ⇔ x = 0", "a(x) = 1s <=> x = 0", &[("x", "a(x) ; x")]),
        biased(
            "antidom.greatest_annihilator",
            "greatest left annihilation: a(x)·y = 0 ⇔ a(x) ≤ a(y)",
            "a(x) ; y = 0 <=> a(x) <= a(y)",
            &[("y", "d(x) ; y")],
        ),
        biased("antidom.antitone", "antidomain antitonicity: x ≤ y ⇒ a(y) ≤ a(x)", "x <= y => a(y) <= a(x)", JOIN_BIAS),
        valid("antidom.meet_zero", "antidomain meet: a(x)·a(y)·d(x+y) = 0", "a(x) ; a(y) ; d(x + y) = 0"),
        valid("antidom.export", "antidomain export: a(a(x)·y) = d(x)+a(y)", "a(a(x) ; y) = d(x) + a(y)"),
        // Modalities.
        native(
            "modal.diamond_direct",
            "diamond characterization: ⟨x⟩p = {(a,{a}) | ∃B. (a,B) ∈ x ∧ B ⊆ p}",
            &["x", "p"],
            native::diamond_direct,
            false,
        ),
        native(
            "modal.box_direct",
            "box characterization: [x]p = {(a,{a}) | ∀B. (a,B) ∈ x ⇒ B ∩ p ≠ ∅}",
            &["x", "p"],
            native::box_direct,
            false,
        ),
        valid("modal.dia_domain_arg", "diamond locality: ⟨x⟩y = ⟨x⟩d(y)", "<x>y = <x>d(y)"),
        valid("modal.box_domain_arg", "box locality: [x]y = [x]d(y)", "[x]y = [x]d(y)"),
        valid("modal.dia_zero", "diamond of zero: ⟨0⟩p = 0", "<0>p = 0"),
        valid("modal.dia_unit", "diamond of the unit: ⟨1σ⟩p = d(p)", "<1s>p = d(p)"),
        valid("modal.dia_par_unit", "diamond of the parallel unit: ⟨1π⟩p = 1σ", "<1p>p = 1s"),
        valid("modal.duality", "box from diamond: [x]p = a(⟨x⟩a(p))", "[x]p = a(<x>a(p))"),
        biased(
            "modal.demodalisation",
            "demodalisation: ⟨x⟩p ≤ d(q) ⇔ x·d(p) ≤ d(q)·x",
            "<x>p <= d(q) <=> x ; d(p) <= d(q) ; x",
            &[("q", "<x>p + q")],
        ),
        valid("cdl.dia_plus", "diamond of a sum: ⟨x+y⟩p = ⟨x⟩p+⟨y⟩p", "<x + y>p = <x>p + <y>p"),
        valid("cdl.dia_seq", "diamond of a composition: ⟨x·y⟩p = ⟨x⟩⟨y⟩p", "<x ; y>p = <x><y>p"),
        valid("cdl.dia_test", "diamond of a test: ⟨d(x)⟩q = d(x)·d(q)", "<d(x)>q = d(x) ; d(q)"),
        valid("cdl.dia_par", "diamond of a parallel composition: ⟨x‖y⟩p = ⟨x⟩p·⟨y⟩p", "<x || y>p = <x>p ; <y>p"),
        noted(
            valid("cdl.dia_star_unfold", "modal star unfold: p+⟨x⟩⟨x*⟩p = ⟨x*⟩p", "p + <x><x^*>p = <x^*>p"),
            UNFOLD_NOTE,
        ),
        biased(
            "cdl.dia_star_induction",
            "modal star induction: ⟨x⟩p ≤ p ⇒ ⟨x*⟩p ≤ p",
            "<x>p <= p => <x^*>p <= p",
            &[("p", "<x^*>p")],
        ),
        valid("cdl.box_plus", "box of a sum: [x+y]p = [x]p·[y]p", "[x + y]p = [x]p ; [y]p"),
        valid("cdl.box_seq", "box of a composition: [x·y]p = [x][y]p", "[x ; y]p = [x][y]p"),
        valid("cdl.box_test", "box of a test: [d(x)]q = a(x)+d(q)", "[d(x)]q = a(x) + d(q)"),
        noted(
            valid("cdl.box_par", "box of a parallel composition: [x‖y]p = [x]p+[y]p", "[x || y]p = [x]p + [y]p"),
            "stated with a product [x]p·[y]p on the right; that form is refuted (see neg.box_par_meet) and the sum is its De Morgan dual of the diamond law",
        ),
        noted(
            valid("cdl.box_star_unfold", "modal box unfold: p·[x][x*]p = [x*]p", "p ; [x][x^*]p = [x^*]p"),
            UNFOLD_NOTE,
        ),
        biased(
            "cdl.box_star_induction",
            "modal box induction: p ≤ [x]p ⇒ p ≤ [x*]p",
            "p <= [x]p => p <= [x^*]p",
            &[("p", "[x^*]p")],
        ),
        // Stars.
        valid("star.unfold_eq", "star unfold equality: 1σ+x·x* = x*", "1s + x ; x^* = x^*"),
        biased("star.induction", "star induction: p+x·y ≤ y ⇒ x*·p ≤ y", "p + x ; y <= y => x^* ; p <= y", &[("y", "bstar(x, p + y)")]),
        valid("star.binary_unfold", "binary star unfold: y+x·(x*y) = (x*y)", "y + x ; bstar(x, y) = bstar(x, y)"),
        biased(
            "star.binary_induction",
            "binary star induction: y+x·z ≤ z ⇒ (x*y) ≤ z",
            "y + x ; z <= z => bstar(x, y) <= z",
            &[("z", "bstar(x, y + z)")],
        ),
        valid("star.unit", "unary star as binary star: x* = (x*1σ)", "x^* = bstar(x, 1s)"),
        valid("star.fusion_incl", "fusion inclusion: x*·y ≤ (x*y)", "x^* ; y <= bstar(x, y)"),
        valid("star.fusion_right", "right fusion inclusion: (x*y)·z ≤ (x*(y·z))", "bstar(x, y) ; z <= bstar(x, y ; z)"),
        valid("star.subid_fusion", "subidentity fusion: (x*p) = x*·p", "bstar(x, p) = x^* ; p"),
        biased(
            "star.simulation",
            "simulation: x·p ≤ p·y ⇒ x*·p ≤ p·y*",
            "x ; p <= p ; y => x^* ; p <= p ; y^*",
            &[("x", "p ; x"), ("y", "x ; p + y")],
        ),
        valid("star.right_unfold", "modal right unfold: p+⟨x*⟩⟨x⟩p ≤ ⟨x*⟩p", "p + <x^*><x>p <= <x^*>p"),
        biased(
            "star.modal_induction",
            "modal star induction variant: p+⟨x⟩q ≤ q ⇒ ⟨x*⟩p ≤ q",
            "p + <x>q <= q => <x^*>p <= q",
            &[("q", "<x^*>(p + q)")],
        ),
        valid(
            "star.segerberg_converse",
            "converse of Segerberg's axiom: p+⟨x*⟩(⟨x⟩p−p) ≤ ⟨x*⟩p",
            "p + <x^*>(<x>p ; a(p)) <= <x^*>p",
        ),
        valid(
            "star.segerberg_box_converse",
            "converse of the box Segerberg axiom: [x*]p ≤ p·[x*](a(p)+[x]p)",
            "[x^*]p <= p ; [x^*](a(p) + [x]p)",
        ),
        native(
            "star.iteration",
            "finite iteration: x* = ⋃ₙ x⁽ⁿ⁾ with x⁽⁰⁾ = 0, x⁽ⁿ⁺¹⁾ = 1σ+x·x⁽ⁿ⁾",
            &["x"],
            native::star_iteration,
            true,
        ),
        // Expected refutations.
        refutable("neg.right_annihilation", "right annihilation: x·0 = 0", "x ; 0 = 0", W_RIGHT_ANNIHILATION),
        refutable("neg.seq_assoc", "associativity: x·(y·z) ≤ (x·y)·z", "x ; (y ; z) <= (x ; y) ; z", W_SEQ_ASSOC),
        refutable("neg.seq_assoc_cube", "associativity of cubes: x·(x·x) ≤ (x·x)·x", "x ; (x ; x) <= (x ; x) ; x", W_SEQ_ASSOC_CUBE),
        refutable("neg.left_distr", "left distributivity: x·(y+z) ≤ x·y+x·z", "x ; (y + z) <= x ; y + x ; z", W_LEFT_DISTR),
        refutable(
            "neg.interaction_converse",
            "converse interaction: (x·z)‖(y·z) ≤ (x‖y)·z",
            "x ; z || y ; z <= (x || y) ; z",
            W_INTERACTION,
        ),
        noted(
            refutable("neg.dia_additivity", "diamond additivity: ⟨x⟩(p+q) = ⟨x⟩p+⟨x⟩q", "<x>(p + q) = <x>p + <x>q", W_ADDITIVITY),
            "the displayed value of ⟨x⟩(p+q) is {(a,{a,b})}, which is not a subidentity; the computed value is {(a,{a})}",
        ),
        refutable("neg.dia_strictness", "diamond strictness: ⟨x⟩0 = 0", "<x>0 = 0", W_STRICTNESS),
        refutable(
            "neg.box_multiplicativity",
            "box multiplicativity: [x](p·q) = [x]p·[x]q",
            "[x](p ; q) = [x]p ; [x]q",
            W_ADDITIVITY,
        ),
        refutable("neg.box_costrictness", "box co-strictness: [x]1σ = 1σ", "[x]1s = 1s", W_STRICTNESS),
        refutable("neg.conjugation", "conjugation: ⟨x⟩p·q = 0 ⇔ p·[x]q = 0", "<x>p ; q = 0 <=> p ; [x]q = 0", W_CONJUGATION),
        refutable("neg.star_fusion_eq", "star fusion: (x*y) = x*·y", "bstar(x, y) = x^* ; y", W_FUSION),
        refutable(
            "neg.segerberg",
            "Segerberg's axiom: ⟨x*⟩p ≤ p+⟨x*⟩(⟨x⟩p−p)",
            "<x^*>p <= p + <x^*>(<x>p ; a(p))",
            W_SEGERBERG,
        ),
        refutable(
            "neg.segerberg_box",
            "box form of Segerberg's axiom: p·[x*](p→[x]p) ≤ [x*]p",
            "p ; [x^*](a(p) + [x]p) <= [x^*]p",
            W_SEGERBERG_BOX,
        ),
        refutable("neg.box_par_meet", "box of a parallel composition as a product: [x‖y]p = [x]p·[y]p", "[x || y]p = [x]p ; [y]p", W_BOX_PAR),
    ]
}

fn build(def: Def) -> Law {
    let (check, vars, uses_star) = match def.native {
        Some((vars, f, star)) => (Check::Native(f), vars.iter().map(|s| s.to_string()).collect(), star),
        None => {
            let f = parse_formula(def.text).unwrap_or_else(|e| panic!("law {}: {e}", def.id));
            let star = formula_uses_star(&f);
            let vars = f.variables();
            (Check::Formula(f), vars, star)
        }
    };
    let vars = vars.into_iter().map(|name| Variable { kind: VarKind::of(&name), name }).collect();
    let bias = def
        .bias
        .iter()
        .map(|(v, t)| (v.to_string(), parse_term(t).unwrap_or_else(|e| panic!("law {} bias: {e}", def.id))))
        .collect();
    Law {
        id: def.id,
        anchor: def.anchor,
        polarity: if def.witness.is_some() { Polarity::Refutable } else { Polarity::Valid },
        group: def.group,
        check,
        vars,
        bias,
        witness: def.witness,
        discrepancy: def.discrepancy,
        uses_star,
    }
}

/// The full registry, in a fixed order.
pub fn list_laws() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| definitions().into_iter().map(build).collect())
}

pub fn law(id: &str) -> Option<&'static Law> {
    list_laws().iter().find(|l| l.id == id)
}
