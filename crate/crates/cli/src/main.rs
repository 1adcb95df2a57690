use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cmcartan::bounds::Limits;
use cmcartan::verify::Reference;
use cmcartan::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::BufWriter::new(std::io::stdout());
    let result =
        Limits::from_env().and_then(|limits| run(&cli.command, &limits, &Reference, &mut out));
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(failure), _) => {
            eprintln!("cmcartan: {failure}");
            ExitCode::from(failure.exit_code())
        }
        (Ok(_), Err(e)) => {
            eprintln!("cmcartan: {e}");
            ExitCode::from(2)
        }
    }
}
