fn main() {
    std::process::exit(simconj::cli::main_with_args(std::env::args_os()));
}
