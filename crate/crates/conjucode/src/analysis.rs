//! Full analysis of one code descriptor: dimensions, duality class, hull by
//! both routes, trace-code report, distances within the enumeration bound and
//! EAQEC parameters. Human output is a flat key/value block; machine output is
//! a single line with a stable field order.

use crate::acc::{trace_mat_mul, DualityClass, MinDistance};
use crate::descriptor::CodeDescriptor;
use crate::eaqec::{self, EaqecParams};
use crate::poly::BinPoly;
use crate::tracecode::{self, TraceAnalysis};
use crate::Result;

#[derive(Clone)]
pub struct AnalysisReport {
    pub descriptor: String,
    pub n: usize,
    /// Image generator (always recovered, whichever source form was given).
    pub g: BinPoly,
    pub acc_dim: usize,
    pub acc_distance: MinDistance,
    pub duality: DualityClass,
    pub acd: bool,
    pub hull_gen: BinPoly,
    pub hull_dim: usize,
    /// rank(G (.)_Tr G^T), reported alongside the lcm-route hull dimension.
    pub ggt_rank: usize,
    pub trace: TraceAnalysis,
    pub trace_dim: usize,
    pub trace_distance: MinDistance,
    pub eaqec: EaqecParams,
    pub max_dim: usize,
}

pub fn analyze(desc: &CodeDescriptor, max_dim: usize) -> Result<AnalysisReport> {
    let code = desc.build()?;
    let code = match code.image_gen() {
        Some(_) => code,
        None => unreachable!("descriptor-built codes always carry a generator"),
    };
    let g = code.image_gen().expect("generator known").clone();
    let n = code.n();

    let hull = code.hull()?;
    let gm = code.generator_matrix();
    let ggt_rank = trace_mat_mul(&gm, &gm.transpose())?.rank();
    let hull_rank_route = code.hull_dim_via_rank();
    // two theorems, one number; disagreement would be an arithmetic bug
    assert_eq!(hull.dim(), hull_rank_route, "hull routes must agree");

    let trace_code = tracecode::trace_code_of(&code)?;
    let trace = tracecode::duality_report(&code)?;
    let trace_distance = tracecode::min_distance(&trace_code, max_dim);
    let eaqec = eaqec::eaqec_from_trace(&trace_code, trace_distance.value());

    Ok(AnalysisReport {
        descriptor: desc.to_string(),
        n,
        acc_dim: code.dim(),
        acc_distance: code.min_gray_distance(max_dim),
        duality: code.duality_class(),
        acd: code.is_acd(),
        hull_gen: hull
            .image_gen()
            .expect("hull built from polynomial")
            .clone(),
        hull_dim: hull.dim(),
        ggt_rank,
        trace_dim: trace_code.dim(),
        trace,
        trace_distance,
        eaqec,
        max_dim,
        g,
    })
}

fn duality_name(d: &DualityClass) -> &'static str {
    match (d.self_dual, d.self_orthogonal, d.dual_containing) {
        (true, _, _) => "self_dual",
        (_, true, _) => "self_orthogonal",
        (_, _, true) => "dual_containing",
        _ => "none",
    }
}

impl AnalysisReport {
    fn inclusion(&self) -> &'static str {
        if self.trace.inclusion_strict {
            "strict"
        } else {
            "equal"
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        line("descriptor", self.descriptor.clone());
        line("n", self.n.to_string());
        line("g", format!("{} (coeffs {})", self.g, self.g.coeff_string()));
        line("acc_dim", self.acc_dim.to_string());
        line("acc_min_gray_distance", self.acc_distance.to_string());
        line("duality_class", duality_name(&self.duality).to_string());
        line("acd", self.acd.to_string());
        line("hull_gen", self.hull_gen.to_string());
        line("hull_dim", self.hull_dim.to_string());
        line(
            "ggt_rank",
            format!("{} (= acc_dim - hull_dim)", self.ggt_rank),
        );
        line("trace_r", self.trace.r.to_string());
        line("trace_dim", self.trace_dim.to_string());
        line("trace_t", self.trace.t.to_string());
        line("trace_dual_gen", self.trace.dual_gen.to_string());
        line("trace_inclusion", self.inclusion().to_string());
        line("trace_lcd", self.trace.lcd.to_string());
        line("trace_min_distance", self.trace_distance.to_string());
        line(
            "eaqec",
            format!(
                "{} rate={} net={} maximal={}",
                self.eaqec,
                self.eaqec.rate(),
                self.eaqec.net_rate(),
                self.eaqec.is_maximal_entanglement()
            ),
        );
        line("max_dim", self.max_dim.to_string());
        out
    }

    pub fn machine(&self) -> String {
        format!(
            "n={} g={} acc_dim={} acc_d={} duality={} acd={} hull_gen={} hull={} ggt_rank={} \
             r={} trace_dim={} t={} dual_gen={} inclusion={} lcd={} trace_d={} \
             eaqec={} rate={} net={} maximal={} max_dim={}",
            self.n,
            self.g.coeff_string(),
            self.acc_dim,
            self.acc_distance,
            duality_name(&self.duality),
            self.acd,
            self.hull_gen.coeff_string(),
            self.hull_dim,
            self.ggt_rank,
            self.trace.r.coeff_string(),
            self.trace_dim,
            self.trace.t.coeff_string(),
            self.trace.dual_gen.coeff_string(),
            self.inclusion(),
            self.trace.lcd,
            self.trace_distance,
            self.eaqec,
            self.eaqec.rate(),
            self.eaqec.net_rate(),
            self.eaqec.is_maximal_entanglement(),
            self.max_dim,
        )
    }
}
