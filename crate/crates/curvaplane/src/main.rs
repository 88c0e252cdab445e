use std::process::ExitCode;

fn main() -> ExitCode {
    curvaplane::cli::main_with(std::env::args_os())
}
