fn main() {
    std::process::exit(curvelab::cli::main_with(std::env::args_os()));
}
