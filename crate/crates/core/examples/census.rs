//! Prints the class size of a Dynkin seed and how its members split among
//! the families.
//!
//!     cargo run --release --example census -- D1 6

use std::collections::BTreeMap;

use mutclass_core::verify::dynkin_seed;
use mutclass_core::{classify, enumerate_class, Limits, TypeKind};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (Some(kind), Some(rank)) = (args.first(), args.get(1)) else {
        eprintln!("usage: census TYPE RANK");
        std::process::exit(1);
    };
    let kind: TypeKind = kind.parse().expect("type is one of A, B, D, B1, C1, D1");
    let rank: usize = rank.parse().expect("rank is a number");
    let seed = dynkin_seed(kind, rank).expect("rank is at least the type's minimum");
    let class = enumerate_class(&seed, Limits::default()).expect("seed is connected");
    println!("{kind}({rank}): {} members", class.len());
    let mut census: BTreeMap<String, usize> = BTreeMap::new();
    for d in class.members.values() {
        let name = classify(d)
            .family_match
            .map_or_else(|| "Unknown".to_string(), |m| m.family.shape_name());
        *census.entry(name).or_default() += 1;
    }
    for (family, n) in census {
        println!("{n:6}  {family}");
    }
}
