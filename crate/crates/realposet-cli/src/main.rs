use clap::Parser;

fn main() {
    let cli = realposet_cli::Cli::parse();
    std::process::exit(realposet_cli::run(cli));
}
