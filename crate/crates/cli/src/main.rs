use clap::Parser;

fn main() {
    let cli = graphgeom_cli::Cli::parse();
    std::process::exit(graphgeom_cli::run(cli));
}
