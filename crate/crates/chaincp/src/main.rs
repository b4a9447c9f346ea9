use clap::Parser;

fn main() {
    let cli = chaincp::cli::Cli::parse();
    let (out, code) = chaincp::cli::run(&cli);
    println!("{out}");
    std::process::exit(code);
}
