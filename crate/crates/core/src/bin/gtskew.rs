fn main() {
    std::process::exit(gtskew::cli::main_with_args(std::env::args_os()));
}
