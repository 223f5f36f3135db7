//! Spin networks: build the tetrahedral network of a 6j-symbol, bring it to
//! standard form, conjugate it, round-trip it through JSON and evaluate.

use w6j::network::builders::{self, Expected};
use w6j::network::{
    evaluate_closed, hermitian_conjugate, is_standard_form, parse, reverse_arrow, serialize,
    to_standard_form,
};
use w6j::symbols::{six_j_msum, SixJArgs};

fn main() -> w6j::Result<()> {
    let args = SixJArgs::from_twice([3, 2, 1, 1, 2, 3]);
    let net = builders::tetrahedral(&args)?;
    println!("{args}: {} 3j nodes, {} edges", net.count_w3(), net.edges.len());
    println!("  network  = {}", evaluate_closed(&net)?);
    println!("  m-sum    = {}", six_j_msum(&args)?);

    let std = to_standard_form(&net);
    println!("  standard form: {} (K nodes: {})", is_standard_form(&std), std.count_k2());
    println!("  value in standard form = {}", evaluate_closed(&std)?);

    let e = &net.edges[0];
    let rev = reverse_arrow(&net, &e.id)?;
    println!("  reverse_arrow({}) keeps the value: {}, phase now {}", e.id, evaluate_closed(&rev)?, rev.phase);

    let conj = hermitian_conjugate(&net);
    println!("  conjugate = {}", evaluate_closed(&conj)?);

    let text = serialize(&std)?;
    let back = parse(&text)?;
    println!("  JSON round trip preserves the network: {}", back == std);

    println!("\ncorpus:");
    for (name, net, expected) in builders::corpus()? {
        let v = evaluate_closed(&net)?;
        let check = match expected {
            Expected::SixJ(a) => format!("m-sum {}", six_j_msum(&a)?),
            Expected::Integer(k) => format!("closed form {k}"),
            Expected::Recorded => "recorded".to_string(),
        };
        println!("  {name:<28} {v:<24} ({check})");
    }
    Ok(())
}
