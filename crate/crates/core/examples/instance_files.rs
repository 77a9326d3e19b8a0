// Write an instance document, then drive it through the command layer.

use std::error::Error;

use latflow::cli::{run_command, InstanceDocument, EXIT_FALSE, EXIT_TRUE};
use latflow::dfa::diamond_example;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("diamond.json");
    std::fs::write(
        &path,
        InstanceDocument::from_system(&diamond_example()).to_json(),
    )?;
    let file = path.to_string_lossy().into_owned();

    let mfp = run_command(["latflow", "mfp", &file]);
    print!("{}", mfp.stdout);
    assert_eq!(mfp.exit_code, EXIT_FALSE);

    let mop = run_command(["latflow", "--json", "mop", &file]);
    assert_eq!(mop.exit_code, EXIT_TRUE);
    assert_eq!(mop.report.decision, Some(true));

    let check = run_command(["latflow", "check", &file]);
    print!("{}", check.stdout);
    assert!(check.report.properties["mfp_below_mop"]);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
