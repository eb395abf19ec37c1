use zfc_core::{DirectedGraph, GraphKind, SystemSpec};

fn main() -> zfc_core::Result<()> {
    let g = DirectedGraph::new(3, [(1, 1), (2, 1), (1, 2), (1, 3), (2, 3)])?;
    let spec = SystemSpec::new(g, GraphKind::LoopDirected, [1])?;
    assert!(zfc_core::strong_zf(&spec)?.verdict);
    assert!(zfc_core::strong_matching(&spec)?.verdict);
    let report = zfc_core::kalman_trial(&spec, 100, 42)?;
    assert_eq!(report.controllable_count, 100);
    println!(
        "strongly controllable from one input; {}/{} exact realizations controllable",
        report.controllable_count, report.samples
    );
    Ok(())
}
