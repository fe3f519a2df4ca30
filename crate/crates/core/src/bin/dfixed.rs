fn main() {
    std::process::exit(dfixed::cli::main_with_env());
}
