//! Build middle and line graphs and inspect vertex provenance.

use midtdc::families::{path, star};
use midtdc::{line_graph, middle_graph, MiddleVertexLabel};

pub fn run_example() -> midtdc::Result<()> {
    let p4 = path(4);
    let mg = middle_graph(&p4)?;
    println!(
        "M(P_4): order {}, size {}",
        mg.graph().order(),
        mg.graph().size()
    );
    for v in mg.graph().vertices() {
        let names: Vec<String> = mg
            .graph()
            .neighbors(v)
            .map(|u| mg.label(u).display())
            .collect();
        println!("  {:>4} ~ {}", mg.label(v).display(), names.join(" "));
    }

    // Edge-vertices induce a copy of the line graph.
    let lg = line_graph(&p4)?;
    let embedded = mg.embed_line();
    for &(a, b) in lg.graph().edges() {
        assert!(mg.graph().has_edge(embedded[a], embedded[b]));
    }
    println!("L(P_4) embeds on vertices {embedded:?}");

    // The hub of K_{1,3} and its three edge-vertices form a K_4.
    let sm = middle_graph(&star(3))?;
    let hub_side: Vec<_> = std::iter::once(0).chain(sm.edge_vertices()).collect();
    let clique = hub_side.iter().all(|&u| {
        hub_side
            .iter()
            .all(|&v| u == v || sm.graph().has_edge(u, v))
    });
    println!("M(K_1,3): hub plus edge-vertices form a clique: {clique}");

    let json = serde_json::to_string(&mg.to_json())?;
    let back = serde_json::from_str::<midtdc::middle::MiddleGraphJson>(&json)?.recover()?;
    assert_eq!(back.label(4), MiddleVertexLabel::EdgeVertex { i: 0, j: 1 });
    println!("JSON round trip: {} bytes", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> midtdc::Result<()> {
    run_example()
}
