use bwf_cli::config::Cli;
use clap::Parser;

fn main() {
    std::process::exit(bwf_cli::execute(&Cli::parse()));
}
