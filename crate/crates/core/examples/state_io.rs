// States and operators serialize to `{n, kind, re, im}` JSON records.

use qfi_bell::dicke::CollectiveOperator;
use qfi_bell::error::Result;
use qfi_bell::state::SymmetricState;

pub fn run_example() -> Result<()> {
    let rho = SymmetricState::ghz_mixture(3, 0.5)?;
    let json = rho.to_json()?;
    println!("{json}");
    let back = SymmetricState::from_json(&json)?;
    println!("round trip exact: {}", back == rho);

    let record = CollectiveOperator::sx(2)?.to_record();
    println!("{}", serde_json::to_string(&record)?);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
