use std::io;
use std::process::ExitCode;

use clap::Parser;
use greedy_energy_cli::args::{Cli, Command};
use greedy_energy_cli::commands;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seq = cli.sequential;
    let stdout = &mut io::stdout().lock();
    let result = match &cli.command {
        Command::Generate(a) => commands::cmd_generate(a, seq).map(|_| true),
        Command::SecondOrder(a) => commands::cmd_second_order(a, seq).map(|_| true),
        Command::GCurves(a) => commands::cmd_g_curves(a).map(|_| true),
        Command::Verify(a) => commands::cmd_verify(a, stdout),
        Command::Constants(a) => commands::cmd_constants(a, stdout).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
