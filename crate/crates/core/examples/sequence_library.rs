// Print every built-in composite sequence as a phase table and read it back.

use cpgate::sequences::{all_sequences, parse_phase_table, phase_table, CompositePhases};

pub fn run_example() -> cpgate::Result<()> {
    let table = phase_table(&all_sequences());
    print!("{table}");

    let parsed = parse_phase_table(&table)?;
    println!("# parsed {} sequences", parsed.len());

    let u5a = CompositePhases::lookup("universal", "U5a")?;
    println!("# lookup universal/U5a: {} pulses", u5a.len());
    Ok(())
}

fn main() {
    run_example().expect("sequence library example");
}
