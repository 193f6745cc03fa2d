fn main() {
    std::process::exit(pcgauss::cli::main_with_args(std::env::args_os()));
}
