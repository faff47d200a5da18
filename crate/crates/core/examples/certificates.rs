//! An optimal TDC certificate, its witnesses and common neighbourhoods,
//! and the structural statements every middle-graph TDC satisfies.

use midtdc::bounds::check_middle_certificate;
use midtdc::families::friendship;
use midtdc::middle_graph;
use midtdc::solve::{
    common_neighborhood, is_tdc, private_neighbors, tdc_number_of_middle, Budget, Coloring,
};

pub fn run_example() -> midtdc::Result<()> {
    let mg = middle_graph(&friendship(2))?;
    let g = mg.graph();
    let report = tdc_number_of_middle(&mg, Budget::UNLIMITED)?;
    let cert = report
        .tdc_certificate()
        .expect("TDC reports carry a certificate");
    println!("χ_d^t(M(F_2)) = {}", report.require_optimum()?);
    for (k, class) in cert.coloring.classes().iter().enumerate() {
        let names: Vec<String> = class.iter().map(|&v| mg.label(v).display()).collect();
        let cn: Vec<String> = common_neighborhood(g, class)?
            .iter()
            .map(|&v| mg.label(v).display())
            .collect();
        let private = private_neighbors(g, &cert.coloring, k)?.len();
        println!(
            "  V{k} = {{{}}}  CN = {{{}}}  private: {private}",
            names.join(","),
            cn.join(",")
        );
    }
    assert!(cert.validates(g));
    for row in check_middle_certificate(&mg, cert, "M(F_2)")? {
        println!("  {row}");
        assert!(row.passed());
    }

    // A proper colouring that is not a TDC: v0 sees only m0_1, whose class
    // also holds m2_3.
    let p = middle_graph(&midtdc::families::path(4))?;
    let all_originals_apart = Coloring::from_assignment(&[0, 0, 0, 0, 1, 2, 1]);
    let verdict = is_tdc(p.graph(), &all_originals_apart)?;
    println!("3-colouring of M(P_4) is a TDC: {}", verdict.is_valid());
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
