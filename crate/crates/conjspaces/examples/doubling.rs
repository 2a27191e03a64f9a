//! The degree-doubling correspondence on unstable algebras: `double` doubles
//! every degree and transports both tables (Sq^k on the half becomes Sq^{2k}
//! on the double), `halve` inverts it when every degree is even.  The model
//! cases: H*(RP2) doubles to H*(CP2), and H*(CP2) doubles to H*(HP2).

use conjspaces::catalog::Catalog;
use conjspaces::formats::alg;
use conjspaces::unstable::{Builder, UnstableAlgebra};
use conjspaces::Result;

fn main() -> Result<()> {
    let rp2 = Builder::new("RP2")
        .class("a", 1)
        .class("a2", 2)
        .product("a", "a", &["a2"])
        .fundamental("a2")
        .build()?;
    println!("{}", alg::print(&rp2));

    let d = rp2.double()?;
    println!("{}", alg::print(&d));

    // The double carries the cohomology of CP2: same table as the catalog
    // entry up to the generator names.
    let cat = Catalog::standard();
    let cp2 = cat.algebra("CP2").expect("catalog has CP2");
    expect_match(&d, cp2, &[("a", "x"), ("a2", "x2")]);
    println!("double(RP2) matches the catalog CP2 table under a -> x\n");

    // Doubling twice climbs RP2 -> CP2 -> HP2.
    let dd = d.halve()?.double()?.double()?;
    let hp2 = cat.algebra("HP2").expect("catalog has HP2");
    expect_match(&dd, hp2, &[("a", "y"), ("a2", "y2")]);
    println!("double(double(RP2)) matches the catalog HP2 table\n");

    // halve . double is the identity on names, degrees, and both tables.
    for name in ["RP2", "CP2", "FloydZ", "T2", "K", "S1vS2"] {
        let a = cat.algebra(name).unwrap();
        let back = a.double()?.halve()?;
        let idmap: Vec<(&str, &str)> = a
            .basis()
            .iter()
            .map(|c| (c.label.as_str(), c.label.as_str()))
            .collect();
        expect_match(a, &back, &idmap);
        println!("halve(double({name})) = {name}");
    }

    // The Floyd pair: FloydZ is the half of FloydY, including the Sq table.
    let z = cat.algebra("FloydZ").unwrap();
    let y = cat.algebra("FloydY").unwrap();
    let dz = z.double()?;
    expect_match(&dz, y, &[("f2", "e4"), ("f3", "e6"), ("f5", "e10")]);
    println!("\ndouble(FloydZ) matches FloydY: Sq1 f2 = f3 becomes Sq2 e4 = e6");
    Ok(())
}

fn expect_match(a: &UnstableAlgebra, b: &UnstableAlgebra, map: &[(&str, &str)]) {
    let owned: Vec<(String, String)> = map
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    if let Err(witness) = a.tables_equal_under(b, &owned) {
        panic!("{} and {} disagree: {witness}", a.name(), b.name());
    }
}
