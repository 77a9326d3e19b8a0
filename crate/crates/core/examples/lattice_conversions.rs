// Cover relation to partial order to meet/join tables, and what happens
// when the order is not a lattice.

use std::error::Error;

use latflow::lattice::{cover_to_poset, poset_to_algebra, CoverRelation, LatticeError, Poset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // The pentagon N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    let cover = CoverRelation::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])?;
    let poset = cover_to_poset(&cover);
    let lattice = poset_to_algebra(&poset)?;

    println!(
        "pentagon: bottom {}, top {}, height {}",
        lattice.bottom(),
        lattice.top(),
        lattice.height()
    );
    println!("meet table:");
    for a in 0..5 {
        let row: Vec<String> = (0..5).map(|b| lattice.meet(a, b).to_string()).collect();
        println!("  {}", row.join(" "));
    }
    assert_eq!(lattice.meet(2, 3), 0);
    assert_eq!(lattice.join(1, 3), 4);

    // Round trip through the order recovers the same covers.
    let mut back: Vec<_> = lattice.to_cover().covers().collect();
    back.sort_unstable();
    assert_eq!(back, vec![(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)]);

    // Two minimal and two maximal elements, fully connected: no meets.
    let n = Poset::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])?;
    match poset_to_algebra(&n) {
        Err(e @ LatticeError::NotALattice(..)) => println!("bowtie rejected: {e}"),
        other => return Err(format!("expected rejection, got {other:?}").into()),
    }

    // A cover relation must be acyclic and free of implied pairs.
    assert!(matches!(
        CoverRelation::new(3, &[(0, 1), (1, 2), (0, 2)]),
        Err(LatticeError::RedundantCover { .. })
    ));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
