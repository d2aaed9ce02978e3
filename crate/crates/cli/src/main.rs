fn main() {
    std::process::exit(poincare_maxwell_cli::cli::main_with(std::env::args_os()));
}
