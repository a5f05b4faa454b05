use std::process::ExitCode;

fn main() -> ExitCode {
    okounkov_lab::cli::main_from(std::env::args_os())
}
