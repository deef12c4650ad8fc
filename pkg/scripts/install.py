#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Script de instalação para DiophTools
Instala o pacote e roda o verificador de aceitação
"""

import os
import sys
import subprocess
import argparse
from pathlib import Path


def run_command(cmd, check=True):
    """Executa comando e retorna resultado"""
    print(f"🔧 Executando: {cmd}")
    try:
        return subprocess.run(cmd, shell=True, check=check, text=True)
    except subprocess.CalledProcessError as e:
        print(f"❌ Erro ao executar comando: {e}")
        sys.exit(1)


def check_python_version():
    """Verifica se a versão do Python é compatível"""
    version = sys.version_info
    if version < (3, 9):
        print(f"❌ Python {version.major}.{version.minor} não é suportado")
        print("DiophTools requer Python 3.9 ou superior")
        sys.exit(1)
    print(f"✅ Python {version.major}.{version.minor}.{version.micro} - OK")


def install_package(mode, extras=None):
    """Instala o pacote DiophTools"""
    print(f"📦 Instalando DiophTools (modo: {mode})...")
    target = "-e ." if mode == "development" else "."
    if extras:
        target += f"[{extras}]"
    run_command(f"{sys.executable} -m pip install {target}")
    if mode == "development" and Path("requirements-dev.txt").exists():
        run_command(f"{sys.executable} -m pip install -r requirements-dev.txt")
    print("✅ DiophTools instalado com sucesso")


def verify_installation(acceptance):
    """Importa o pacote e, se pedido, roda os critérios de aceitação"""
    try:
        import DiophTools
        print(f"📋 Versão instalada: {DiophTools.__version__}")
    except ImportError as e:
        print(f"❌ Erro na importação: {e}")
        return False
    if acceptance:
        from DiophTools.tests.tests import run_all_tests
        return run_all_tests()
    return True


def main():
    parser = argparse.ArgumentParser(description='Script de instalação para DiophTools')
    parser.add_argument('--mode', choices=['user', 'development'], default='user', help='Modo de instalação')
    parser.add_argument('--extras', type=str, help='Dependências extras para instalar (dev, all)')
    parser.add_argument('--acceptance', action='store_true', help='Roda os critérios de aceitação ao final')
    args = parser.parse_args()

    print("🚀 DiophTools Installation Script")
    print("=" * 50)
    check_python_version()
    os.chdir(Path(__file__).parent.parent)
    install_package(args.mode, args.extras)
    if verify_installation(args.acceptance):
        print("🎉 Instalação concluída com sucesso!")
        print("   - Execute 'chosennum --help' para ver os subcomandos")
    else:
        print("❌ Instalação pode ter falhado. Verifique os erros acima.")
        sys.exit(1)


if __name__ == '__main__':
    main()
