//! Embedding obstructions from capacity sequences, and the prequantized ball
//! squeezing criteria.

use capax::capacities::{obstruct_embedding, Verdict};
use capax::contact::{ekp_squeezing_verdict, obstruct_contact_embedding};
use capax::{q, CapacityConfig, ToricDomain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CapacityConfig::default();

    let b1 = ToricDomain::ball(q("1"), 2)?;
    let b09 = ToricDomain::ball(q("9/10"), 2)?;
    println!("B(1) -> B(9/10): {:?}", obstruct_embedding(&b1, &b09, 5, &cfg)?.verdict);

    // equal volumes; no c_k separates them
    let e = ToricDomain::ellipsoid(vec![q("1"), q("4")])?;
    let b2 = ToricDomain::ball(q("2"), 2)?;
    let r = obstruct_embedding(&e, &b2, 20, &cfg)?;
    match r.verdict {
        Verdict::Obstructed { first_k, .. } => println!("E(1,4) -> B(2): obstructed at k={first_k}"),
        Verdict::NoObstructionFound => println!("E(1,4) -> B(2): {}", r.notes.join("; ")),
    }

    let big = ToricDomain::ellipsoid(vec![q("5"), q("6")])?;
    let small = ToricDomain::ellipsoid(vec![q("3"), q("7")])?;
    let c = obstruct_contact_embedding(&big, &small, 10, &cfg)?;
    println!("E(5,6)×S¹ -> E(3,7)×S¹: {:?}", c.verdict);

    for (r2, big_r2) in [("1/2", "3/2"), ("3/2", "5/2"), ("1/4", "1/2"), ("1/2", "9/10")] {
        let v = ekp_squeezing_verdict(q(r2), q(big_r2), 2)?;
        println!("πr²={r2:<4} πR²={big_r2:<4} -> {:?}", v.verdict);
    }
    Ok(())
}
