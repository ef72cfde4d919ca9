fn main() {
    std::process::exit(sta_core::cli::main_with_args(std::env::args_os()));
}
